#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "whitlocal/symfunc.hpp"

using namespace whitlocal;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

std::vector<std::string> names(const char* prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Weyl dimension formula: prod_{i<j} (l_i - l_j + j - i) / (j - i).
Rational weyl_dimension(const Partition& lambda, int n) {
  auto l = lambda.padded(n);
  Rational d = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= Rational(l[i] - l[j] + j - i, j - i);
  d.canonicalize();
  return d;
}

// Independent enumeration of one-box extensions: try every row, keep the
// weakly decreasing results.
std::vector<std::vector<int>> one_box_extensions(const std::vector<int>& parts, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> base(parts);
  base.resize(static_cast<std::size_t>(n), 0);
  for (int row = 0; row < n; ++row) {
    auto next = base;
    ++next[row];
    if (std::is_sorted(next.rbegin(), next.rend())) out.push_back(next);
  }
  return out;
}

}  // namespace

TEST_CASE("partitions") {
  Partition p({3, 1, 1, 0, 0});
  CHECK(p.length() == 3);
  CHECK(p.weight() == 5);
  CHECK(p.to_json().dump() == "[3,1,1]");
  CHECK(Partition::from_json(nlohmann::json::parse("[2,2]")) == Partition({2, 2}));
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({-1}));
  auto five = partitions_of(5, 5);
  CHECK(five.size() == 7);
  CHECK(five.front() == Partition({5}));
  CHECK(five.back() == Partition({1, 1, 1, 1, 1}));
  CHECK(std::is_sorted(five.rbegin(), five.rend()));
  CHECK(partitions_of(5, 2).size() == 3);
  CHECK(partitions_up_to(3, 2).size() == 1 + 1 + 2 + 2);
}

TEST_CASE("complete homogeneous examples") {
  CHECK(complete_homogeneous(1, names("a", 2)) == P("a1 + a2"));
  CHECK(complete_homogeneous(2, names("a", 2)) == P("a1^2 + a1*a2 + a2^2"));
  CHECK(complete_homogeneous(3, std::vector<std::string>{"alpha"}) == P("alpha^3"));
  CHECK(complete_homogeneous(0, names("a", 3)) == P("1"));
  CHECK(complete_homogeneous(-1, names("a", 3)).is_zero());
  // number of monomials of degree k in n variables is C(n+k-1, k)
  CHECK(complete_homogeneous(4, names("a", 3)).size() == 15);
}

TEST_CASE("schur examples") {
  CHECK(schur(Partition({1}), names("a", 2)) == P("a1 + a2"));
  auto s21 = schur(Partition({2, 1}), names("a", 2));
  CHECK(s21 == schur_bialternant_oracle(Partition({2, 1}), names("a", 2)));
  CHECK(s21 == P("a1^2*a2 + a1*a2^2"));
  CHECK(schur(Partition({1, 1, 1}), names("a", 2)).is_zero());
  CHECK(schur(Partition(), names("a", 2)) == P("1"));
}

TEST_CASE("bialternant oracle examples") {
  CHECK(schur_bialternant_oracle(Partition({1}), names("a", 2)) == P("a1 + a2"));
  CHECK(schur_bialternant_oracle(Partition({2}), names("a", 2)) == P("a1^2 + a1*a2 + a2^2"));
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 4; ++k)
      CHECK(schur_bialternant_oracle(Partition({k}), names("a", n)) == complete_homogeneous(k, names("a", n)));
  CHECK_THROWS(schur_bialternant_oracle(Partition({1}), {"a", "a"}));
}

TEST_CASE("Jacobi-Trudi agrees with the bialternant for |lambda| <= 6, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : partitions_up_to(6, n))
      REQUIRE_MESSAGE(schur(lambda, names("a", n)) == schur_bialternant_oracle(lambda, names("a", n)),
                      lambda.to_string() << " n=" << n);
}

TEST_CASE("schur is symmetric under every permutation of the variables") {
  for (int n = 2; n <= 4; ++n) {
    auto vars = names("a", n);
    for (const auto& lambda : partitions_up_to(5, n)) {
      auto base = schur(lambda, vars);
      auto perm = vars;
      std::sort(perm.begin(), perm.end());
      do {
        REQUIRE(schur(lambda, perm) == base);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("dimension formula at all ones") {
  for (int n = 1; n <= 4; ++n) {
    std::map<std::string, Rational> ones;
    for (const auto& v : names("a", n)) ones[v] = 1;
    for (const auto& lambda : partitions_up_to(6, n))
      REQUIRE(schur(lambda, names("a", n)).evaluate(ones) == weyl_dimension(lambda, n));
  }
}

TEST_CASE("Pieri rule for a single box") {
  for (int n = 1; n <= 3; ++n) {
    auto vars = names("a", n);
    auto h1 = complete_homogeneous(1, vars);
    for (const auto& lambda : partitions_up_to(4, n)) {
      LaurentPoly rhs;
      for (const auto& mu : one_box_extensions(lambda.padded(n), n)) rhs += schur(Partition(mu), vars);
      REQUIRE(h1 * schur(lambda, vars) == rhs);
    }
  }
}

TEST_CASE("Schur polynomials of inverted and numeric values") {
  std::vector<LaurentPoly> inv{P("a1^(-1)"), P("a2^(-1)")};
  CHECK(schur(Partition({1}), inv) == P("a1^(-1) + a2^(-1)"));
  std::vector<LaurentPoly> nums{LaurentPoly(2), LaurentPoly(Rational(1, 2))};
  CHECK(schur(Partition({2}), nums) == LaurentPoly(Rational(21, 4)));
  CHECK(elementary_symmetric(2, symbol_list("a", 3)) == P("a1*a2 + a1*a3 + a2*a3"));
}

TEST_CASE("cauchy_check examples") {
  CHECK(cauchy_check(1, 1, 3).passed());
  CHECK(cauchy_check(2, 1, 4).passed());
  CHECK(cauchy_check(3, 2, 6).passed());
  auto r = cauchy_check(2, 2, 3);
  CHECK(r.checks.size() == 4);
}

TEST_CASE("Cauchy identity for all (n, m) in {1,2,3}^2 at order 6") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) REQUIRE_MESSAGE(cauchy_check(n, m, 6).passed(), "n=" << n << " m=" << m);
}
