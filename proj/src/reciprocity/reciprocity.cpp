#include "whitlocal/reciprocity.hpp"

#include <cstdio>

#include "whitlocal/error.hpp"

namespace whitlocal {

namespace {

void check_rank(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "rank must be at least 2");
}

std::string two_digit(int n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "n=%02d", n);
  return buf;
}

std::optional<std::string> expect_equal(const std::string& what, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs == rhs) return std::nullopt;
  return what + ": " + lhs.to_string() + " != " + rhs.to_string();
}

std::optional<std::string> expect_equal(const std::string& what, const SymbolicMatrix& lhs, const SymbolicMatrix& rhs) {
  auto diff = first_difference(lhs, rhs);
  if (diff.empty()) return std::nullopt;
  return what + ": " + diff;
}

}  // namespace

ParamPair ParamPair::symbolic(int n) {
  check_rank(n);
  return {LaurentPoly::variable("s"), LaurentPoly::variable("w"), n};
}

nlohmann::ordered_json ParamPair::to_json() const {
  nlohmann::ordered_json out;
  out["n"] = n;
  out["s"] = s.to_string();
  out["w"] = w.to_string();
  return out;
}

ParamPair dual_params(const ParamPair& p, const Rational& perturbation) {
  check_rank(p.n);
  LaurentPoly inv_n(Rational(1, p.n));
  LaurentPoly s2 = (LaurentPoly(1) + LaurentPoly(p.n - 1) * p.w - p.s) * inv_n + LaurentPoly(perturbation);
  LaurentPoly w2 = (LaurentPoly(p.n + 1) * p.s + p.w - LaurentPoly(1)) * inv_n;
  return {s2, w2, p.n};
}

SuiteReport verify_involution_and_exponents(int n, const Rational& perturbation) {
  check_rank(n);
  SuiteReport report{"involution", {}};
  const std::string tag = two_digit(n);
  auto p = ParamPair::symbolic(n);
  LaurentPoly half(Rational(1, 2));

  report.checks.push_back(run_check(tag + "/involution", "dual_params applied twice is the identity", [&] {
    auto back = dual_params(dual_params(p, perturbation), perturbation);
    if (auto w = expect_equal("s''", back.s, p.s)) return w;
    return expect_equal("w''", back.w, p.w);
  }));
  report.checks.push_back(run_check(tag + "/exponent-shift", "n(s' - 1/2) = n(1/2 - s) + (n-1)(s + w - 1)", [&] {
    auto d = dual_params(p, perturbation);
    LaurentPoly nn(n);
    return expect_equal("n(s'-1/2)", nn * (d.s - half), nn * (half - p.s) + LaurentPoly(n - 1) * (p.s + p.w - 1));
  }));
  report.checks.push_back(run_check(tag + "/exponent-sum", "s' + w' - 1 = s + w - 1", [&] {
    auto d = dual_params(p, perturbation);
    return expect_equal("s'+w'-1", d.s + d.w - 1, p.s + p.w - 1);
  }));
  report.checks.push_back(run_check(tag + "/central-point", "(1/2, 1/2) is fixed", [&] {
    auto d = dual_params({half, half, n}, perturbation);
    if (auto w = expect_equal("s'", d.s, half)) return w;
    return expect_equal("w'", d.w, half);
  }));
  if (n == 2) {
    report.checks.push_back(run_check(tag + "/rank-two-form", "s' = (1 + w - s)/2", [&] {
      auto d = dual_params(p, perturbation);
      return expect_equal("s'", d.s, (LaurentPoly(1) + p.w - p.s) * half);
    }));
  }
  return report;
}

namespace {

std::string beta(int i) { return "beta" + std::to_string(i); }

SymbolicMatrix unipotent_in_column(int n, int col) {
  auto m = SymbolicMatrix::identity(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n - 1; ++i)
    m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(col - 1)) = LaurentPoly::variable(beta(i));
  return m;
}

}  // namespace

SymbolicMatrix unipotent_at_q(int n) {
  check_rank(n);
  return unipotent_in_column(n, n + 1);
}

SymbolicMatrix unipotent_at_l(int n) {
  check_rank(n);
  return unipotent_in_column(n, n);
}

SymbolicMatrix weyl_swap(int n) {
  check_rank(n);
  auto size = static_cast<std::size_t>(n + 1);
  SymbolicMatrix w(size);
  for (std::size_t i = 0; i + 2 < size; ++i) w.at(i, i) = 1;
  w.at(size - 2, size - 1) = 1;
  w.at(size - 1, size - 2) = 1;
  return w;
}

SuiteReport weyl_conjugation_identity(int n) {
  check_rank(n);
  SuiteReport report{"weyl", {}};
  const std::string tag = two_digit(n);
  report.checks.push_back(run_check(tag + "/conjugation", "w12 U_l(beta) w12 = U_q(beta)", [&] {
    auto w12 = weyl_swap(n);
    return expect_equal("w12 U_l w12", w12 * unipotent_at_l(n) * w12, unipotent_at_q(n));
  }));
  report.checks.push_back(run_check(tag + "/swap-square", "w12 w12 = I", [&] {
    auto w12 = weyl_swap(n);
    return expect_equal("w12^2", w12 * w12, SymbolicMatrix::identity(static_cast<std::size_t>(n + 1)));
  }));
  return report;
}

namespace {

SymbolicMatrix symbolic_block(int size, const std::string& prefix) {
  SymbolicMatrix h(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      h.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          LaurentPoly::variable(prefix + std::to_string(i + 1) + std::to_string(j + 1));
  return h;
}

SymbolicMatrix one_by_one(const LaurentPoly& x) { return SymbolicMatrix::diagonal({x}); }

}  // namespace

SuiteReport cusp_invariance_factorization(int n) {
  check_rank(n);
  SuiteReport report{"cusp", {}};
  const std::string tag = two_digit(n);
  auto size = static_cast<std::size_t>(n + 1);
  LaurentPoly u = LaurentPoly::variable("u");
  LaurentPoly u_inv = LaurentPoly::variable("u", -1);
  auto h = symbolic_block(n - 1, "h");
  auto lhs = SymbolicMatrix::block_diagonal({h.scaled(u), one_by_one(u), one_by_one(1)});
  auto central = SymbolicMatrix::identity(size).scaled(u);
  auto w12 = weyl_swap(n);
  auto inner = SymbolicMatrix::block_diagonal({h, one_by_one(u_inv), one_by_one(1)});

  report.checks.push_back(run_check(tag + "/factorization", "diag(uH, u, 1) = C w12 diag(H, 1/u, 1) w12", [&] {
    return expect_equal("factorization", lhs, central * w12 * inner * w12);
  }));
  report.checks.push_back(run_check(tag + "/central", "C = uI commutes with a generic matrix", [&] {
    auto g = symbolic_block(n + 1, "g");
    return expect_equal("C g vs g C", central * g, g * central);
  }));
  report.checks.push_back(run_check(tag + "/unit-specialization", "u = 1 gives diag(H, 1, 1) on both sides", [&] {
    auto expected = SymbolicMatrix::block_diagonal({h, one_by_one(1), one_by_one(1)});
    if (auto w = expect_equal("left side", lhs.substitute("u", 1), expected)) return w;
    return expect_equal("right side", (central * w12 * inner * w12).substitute("u", 1), expected);
  }));
  return report;
}

}  // namespace whitlocal
