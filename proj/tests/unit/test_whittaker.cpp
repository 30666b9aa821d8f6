#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "whitlocal/error.hpp"
#include "whitlocal/matrix.hpp"
#include "whitlocal/whittaker.hpp"

using namespace whitlocal;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

TorusCocharacter mu(std::vector<int> e) { return TorusCocharacter(std::move(e)); }

// Casselman-Shalika through the bialternant, with delta^{1/2} built from the
// product over i of q^{-m_i (n+1-2i)/2} term by term.
LaurentPoly spherical_oracle(int n, const std::vector<int>& m) {
  for (int i = 0; i + 1 < n; ++i)
    if (m[i] < m[i + 1]) return LaurentPoly();
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  std::vector<int> parts;
  for (int x : m) parts.push_back(x - m.back());
  LaurentPoly out = schur_bialternant_oracle(Partition(parts), names);
  LaurentPoly central(1);
  for (const auto& v : names) central *= LaurentPoly::variable(v);
  out *= central.pow(m.back());
  for (int i = 1; i <= n; ++i) out *= LaurentPoly::variable("q", Rational(-m[i - 1] * (n + 1 - 2 * i), 2));
  return out;
}

// Fractional part of a rational with p-power denominator; psi(x) = e(-{x}) is
// the unramified character of Q_p.
std::complex<double> psi(const Rational& x) {
  mpz_class floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational frac = x - Rational(floor_part);
  return std::polar(1.0, -2 * std::numbers::pi * frac.get_d());
}

// Sums psi(superdiagonal of g u(-beta) g^-1) over beta in (p^-m Z/Z)^{n-1}
// by explicit matrix conjugation, with the uniformizer specialized to p.
std::complex<double> twisted_character_oracle(long p, const std::vector<int>& m_exps, int m) {
  int n = static_cast<int>(m_exps.size()) + 1;
  auto sz = static_cast<std::size_t>(n);
  long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  std::vector<Rational> pw(sz), pw_inv(sz);
  for (int i = 0; i < n; ++i) {
    int e = i + 1 < n ? m_exps[static_cast<std::size_t>(i)] : 0;
    Rational v = 1;
    for (int k = 0; k < std::abs(e); ++k) v *= p;
    pw[static_cast<std::size_t>(i)] = e >= 0 ? v : Rational(1) / v;
    pw_inv[static_cast<std::size_t>(i)] = Rational(1) / pw[static_cast<std::size_t>(i)];
  }
  std::vector<long> b(sz - 1, 0);
  std::complex<double> total = 0;
  for (;;) {
    SymbolicMatrix u = SymbolicMatrix::identity(sz);
    for (std::size_t i = 0; i + 1 < sz; ++i) u.at(i, sz - 1) = LaurentPoly(Rational(-b[i], count));
    std::vector<LaurentPoly> d(pw.begin(), pw.end()), di(pw_inv.begin(), pw_inv.end());
    auto conj = SymbolicMatrix::diagonal(d) * u * SymbolicMatrix::diagonal(di);
    Rational super = 0;
    for (std::size_t i = 0; i + 1 < sz; ++i) super += *conj.at(i, i + 1).constant_value();
    total += psi(super);
    std::size_t i = 0;
    while (i < b.size() && ++b[i] == count) b[i++] = 0;
    if (i == b.size()) break;
  }
  return total;
}

std::vector<int> random_dominant(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int& x : v) x = d(rng);
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

TEST_CASE("cocharacters") {
  auto c = mu({2, 1, -1});
  CHECK(c.is_dominant());
  CHECK_FALSE(mu({0, 1}).is_dominant());
  CHECK(c.weight() == 2);
  CHECK(c.reversed_negated() == mu({1, -1, -2}));
  CHECK(c.extended(0) == mu({2, 1, -1, 0}));
  CHECK(c.to_string() == "(2,1,-1)");
  CHECK(mu({1, 0}).twice_modular_half() == -1);
}

TEST_CASE("spherical value examples") {
  auto rep = UnramifiedRep::symbolic("a", 2);
  CHECK(spherical_value(rep, mu({0, 0})) == LaurentPoly(1));
  CHECK(spherical_value(rep, mu({1, 0})) == P("q^(-1/2)*a1 + q^(-1/2)*a2"));
  CHECK(spherical_value(rep, mu({0, 1})).is_zero());
  CHECK(spherical_value(UnramifiedRep::symbolic("a", 4), mu({0, 0, 0, 0})) == LaurentPoly(1));
  CHECK_THROWS_AS(spherical_value(rep, mu({1})), Error);
}

TEST_CASE("spherical value against the bialternant oracle") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 4; ++n) {
    auto rep = UnramifiedRep::symbolic("a", n);
    for (int trial = 0; trial < 15; ++trial) {
      auto m = random_dominant(rng, n, -2, 3);
      REQUIRE_MESSAGE(spherical_value(rep, mu(m)) == spherical_oracle(n, m), mu(m).to_string());
    }
  }
}

TEST_CASE("support is exactly the dominant cocharacters") {
  for (int n = 1; n <= 4; ++n) {
    auto rep = UnramifiedRep::symbolic("a", n);
    SphericalWhittaker w(rep, 4 * n);
    std::vector<int> e(static_cast<std::size_t>(n), -2);
    for (;;) {
      auto c = mu(e);
      REQUIRE(w.value(c).is_zero() == !c.is_dominant());
      std::size_t i = 0;
      while (i < e.size() && ++e[i] == 3) e[i++] = -2;
      if (i == e.size()) break;
    }
  }
}

TEST_CASE("central twist") {
  std::mt19937 rng(11);
  for (int n = 2; n <= 4; ++n) {
    auto rep = UnramifiedRep::symbolic("a", n, true);
    for (int trial = 0; trial < 10; ++trial) {
      auto m = mu(random_dominant(rng, n, 0, 3));
      for (int c : {-2, -1, 1, 2}) {
        auto lhs = spherical_value(rep, m.shifted(c));
        REQUIRE(lhs == rep.central_value().pow(c) * spherical_value(rep, m));
        REQUIRE(rep.apply_trivial_central(lhs) == rep.apply_trivial_central(spherical_value(rep, m)));
      }
    }
  }
}

TEST_CASE("twisted value examples") {
  auto rep = UnramifiedRep::symbolic("a", 2);
  auto sym = LocalField::symbolic();
  CHECK(twisted_value(rep, mu({0}), 1, sym).is_zero());
  CHECK(twisted_value(rep, mu({1}), 1, sym) == P("q^(1/2)*a1 + q^(1/2)*a2"));
  CHECK(twisted_value(rep, mu({1}), 1, LocalField::numeric(3)) == 3 * spherical_value(rep, mu({1, 0})));
  for (int n = 2; n <= 4; ++n) {
    auto r = UnramifiedRep::symbolic("a", n);
    std::vector<int> e(static_cast<std::size_t>(n - 1), 0);
    e[0] = 2;
    CHECK(twisted_value(r, mu(e), 0, sym) == spherical_value(r, mu(e).extended(0)));
  }
  CHECK_THROWS_AS(twisted_value(rep, mu({1, 0}), 1, sym), Error);
  CHECK_THROWS_AS(twisted_value(rep, mu({1}), 1, LocalField::numeric(2, 1)), Error);
}

TEST_CASE("twisted value against a numeric sum over the unipotent") {
  auto sym = LocalField::symbolic();
  for (long p : {2L, 3L})
    for (int n = 2; n <= 3; ++n) {
      auto rep = UnramifiedRep::symbolic("a", n);
      auto field = LocalField::numeric(p);
      for (int m = 0; m <= 2; ++m) {
        std::vector<std::vector<int>> cochars = n == 2 ? std::vector<std::vector<int>>{{0}, {1}, {2}, {3}}
                                                       : std::vector<std::vector<int>>{{0, 0}, {1, 0}, {2, 1}, {3, 2}, {2, 2}};
        for (const auto& e : cochars) {
          auto sum = twisted_character_oracle(p, e, m);
          REQUIRE(std::abs(sum.imag()) < 1e-9);
          auto expected = spherical_value(rep, mu(e).extended(0)) * LaurentPoly(Rational(std::lround(sum.real())));
          REQUIRE(std::abs(sum.real() - std::lround(sum.real())) < 1e-9);
          REQUIRE_MESSAGE(twisted_value(rep, mu(e), m, field) == expected,
                          "p=" << p << " m=" << m << " mu=" << mu(e).to_string());
        }
      }
    }
  // The printed constant differs from the computed one by p^-m on the support.
  auto rep = UnramifiedRep::symbolic("a", 3);
  CHECK(twisted_value_printed(rep, mu({2, 1}), 1, sym) * P("q") == twisted_value(rep, mu({2, 1}), 1, sym));
  CHECK(twisted_value_printed(rep, mu({2, 0}), 1, sym).is_zero());
}

TEST_CASE("contragredient value") {
  auto rep = UnramifiedRep::symbolic("a", 2);
  CHECK(contragredient_value(rep, mu({0, 0})) == LaurentPoly(1));
  CHECK(contragredient_value(rep, mu({1, 0})) == P("q^(-1/2)*a1^(-1) + q^(-1/2)*a2^(-1)"));
  CHECK_THROWS_AS(contragredient_value(rep, mu({1})), Error);
  std::mt19937 rng(2024);
  for (int n = 2; n <= 4; ++n) {
    auto r = UnramifiedRep::symbolic("a", n);
    auto dual = contragredient(r);
    for (int trial = 0; trial < 20; ++trial) {
      auto m = mu(random_dominant(rng, n, -2, 3));
      REQUIRE(contragredient_value(r, m) == spherical_value(dual, m));
    }
  }
}
