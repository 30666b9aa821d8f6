#include "whitlocal/symfunc.hpp"

#include <set>

#include "whitlocal/error.hpp"
#include "whitlocal/matrix.hpp"
#include "whitlocal/series.hpp"

namespace whitlocal {

std::vector<LaurentPoly> symbol_list(const std::string& prefix, int count) {
  std::vector<LaurentPoly> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) out.push_back(LaurentPoly::variable(prefix + std::to_string(i)));
  return out;
}

std::vector<LaurentPoly> symbol_list(const std::vector<std::string>& names) {
  std::vector<LaurentPoly> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(LaurentPoly::variable(n));
  return out;
}

namespace {

std::vector<LaurentPoly> h_table(std::span<const LaurentPoly> vars, int max_degree) {
  // h_k(x_1..x_i) = h_k(x_1..x_{i-1}) + x_i h_{k-1}(x_1..x_i)
  std::vector<LaurentPoly> h(static_cast<std::size_t>(max_degree) + 1);
  h[0] = LaurentPoly(1);
  for (const auto& x : vars)
    for (int k = 1; k <= max_degree; ++k) h[k].add_product(x, h[k - 1]);
  return h;
}

}  // namespace

LaurentPoly complete_homogeneous(int k, std::span<const LaurentPoly> vars) {
  if (k < 0) return {};
  if (vars.empty()) throw Error(ErrorCode::InvalidArgument, "complete_homogeneous needs at least one variable");
  return h_table(vars, k).back();
}

LaurentPoly complete_homogeneous(int k, const std::vector<std::string>& names) {
  auto vars = symbol_list(names);
  return complete_homogeneous(k, vars);
}

LaurentPoly elementary_symmetric(int k, std::span<const LaurentPoly> vars) {
  if (k < 0 || k > static_cast<int>(vars.size())) return {};
  // e_k(x_1..x_i) = e_k(x_1..x_{i-1}) + x_i e_{k-1}(x_1..x_{i-1}), descending k.
  std::vector<LaurentPoly> e(static_cast<std::size_t>(k) + 1);
  e[0] = LaurentPoly(1);
  for (const auto& x : vars)
    for (int j = k; j >= 1; --j) e[j].add_product(x, e[j - 1]);
  return e[k];
}

SchurTable::SchurTable(std::vector<LaurentPoly> vars, int max_degree) : vars_(std::move(vars)) {
  if (vars_.empty()) throw Error(ErrorCode::InvalidArgument, "Schur table needs at least one variable");
  if (max_degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree bound");
  h_ = h_table(vars_, max_degree);
}

LaurentPoly SchurTable::h(int k) const {
  if (k < 0) return {};
  if (k > max_degree())
    throw Error(ErrorCode::InvalidArgument,
                "h_" + std::to_string(k) + " beyond table degree " + std::to_string(max_degree()));
  return h_[static_cast<std::size_t>(k)];
}

LaurentPoly SchurTable::schur(const Partition& lambda) const {
  const int len = lambda.length();
  if (len > variable_count()) return {};
  if (len == 0) return LaurentPoly(1);
  if (len == 1) return h(lambda[0]);
  SymbolicMatrix jt(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j) jt.at(i, j) = h(lambda[static_cast<std::size_t>(i)] - i + j);
  return determinant(jt);
}

LaurentPoly schur(const Partition& lambda, std::span<const LaurentPoly> vars) {
  SchurTable table(std::vector<LaurentPoly>(vars.begin(), vars.end()), lambda.weight());
  return table.schur(lambda);
}

LaurentPoly schur(const Partition& lambda, const std::vector<std::string>& names) {
  auto vars = symbol_list(names);
  return schur(lambda, vars);
}

LaurentPoly schur_bialternant_oracle(const Partition& lambda, const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "bialternant needs at least one variable");
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
    throw Error(ErrorCode::InvalidArgument, "bialternant variables must be pairwise distinct");
  if (lambda.length() > n) return {};
  auto parts = lambda.padded(n);
  SymbolicMatrix alternant(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) alternant.at(i, j) = LaurentPoly::variable(names[i], parts[j] + n - 1 - j);
  LaurentPoly vandermonde(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      vandermonde = vandermonde * (LaurentPoly::variable(names[i]) - LaurentPoly::variable(names[j]));
  return divide_exact(determinant(alternant), vandermonde);
}

SuiteReport cauchy_check(int n, int m, int order) {
  if (n < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "cauchy_check needs n, m >= 1");
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
  SuiteReport report;
  report.suite = "cauchy";
  const std::string var = "X";
  SchurTable a(symbol_list("a", n), order);
  SchurTable b(symbol_list("b", m), order);

  TruncatedSeries lhs(var, order);
  for (const auto& lambda : partitions_up_to(order, std::min(n, m)))
    lhs.add_to(lambda.weight(), a.schur(lambda) * b.schur(lambda));

  LaurentPoly den(1);
  LaurentPoly x = LaurentPoly::variable(var);
  for (const auto& ai : a.variables())
    for (const auto& bj : b.variables()) den = den * (LaurentPoly(1) - ai * bj * x);
  TruncatedSeries rhs = series_expand(RationalFunction(LaurentPoly(1), den), var, order);

  std::string tag = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
  for (int k = 0; k <= order; ++k) {
    char id[32];
    std::snprintf(id, sizeof id, "%s/deg=%02d", tag.c_str(), k);
    report.checks.push_back(run_check(id, "Schur sum equals kernel expansion at X^" + std::to_string(k),
                                      [&]() -> std::optional<std::string> {
                                        if (lhs[k] == rhs[k]) return std::nullopt;
                                        return "lhs " + lhs[k].to_string() + " != rhs " + rhs[k].to_string();
                                      }));
  }
  return report;
}

}  // namespace whitlocal
