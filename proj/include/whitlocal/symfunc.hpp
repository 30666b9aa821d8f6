#pragma once

#include <span>
#include <string>
#include <vector>

#include "whitlocal/laurent.hpp"
#include "whitlocal/partition.hpp"
#include "whitlocal/report.hpp"

namespace whitlocal {

/// {prefix1, ..., prefixN} as polynomial variables.
std::vector<LaurentPoly> symbol_list(const std::string& prefix, int count);
std::vector<LaurentPoly> symbol_list(const std::vector<std::string>& names);

/// h_k of the given values; h_0 = 1 and h_k = 0 for k < 0.
LaurentPoly complete_homogeneous(int k, std::span<const LaurentPoly> vars);
LaurentPoly complete_homogeneous(int k, const std::vector<std::string>& names);

/// e_k of the given values.
LaurentPoly elementary_symmetric(int k, std::span<const LaurentPoly> vars);

/// Caches h_0..h_K of a fixed list of values and evaluates Schur polynomials
/// from it by the Jacobi-Trudi determinant. The values may be symbols,
/// inverted symbols or rationals.
/// Immutable after construction, so one table can serve several threads.
/// Jacobi-Trudi for s_lambda needs h up to lambda_1 + length - 1 <= |lambda|,
/// so max_degree bounds the weights that can be evaluated.
class SchurTable {
 public:
  SchurTable(std::vector<LaurentPoly> vars, int max_degree);

  int variable_count() const noexcept { return static_cast<int>(vars_.size()); }
  int max_degree() const noexcept { return static_cast<int>(h_.size()) - 1; }
  const std::vector<LaurentPoly>& variables() const noexcept { return vars_; }

  /// h_k; zero for k < 0.
  LaurentPoly h(int k) const;
  /// s_lambda; zero when the partition is longer than the variable list.
  LaurentPoly schur(const Partition& lambda) const;

 private:
  std::vector<LaurentPoly> vars_;
  std::vector<LaurentPoly> h_;
};

LaurentPoly schur(const Partition& lambda, std::span<const LaurentPoly> vars);
LaurentPoly schur(const Partition& lambda, const std::vector<std::string>& names);

/// det(x_i^(lambda_j + n - j)) / prod_{i<j} (x_i - x_j), with exact division.
/// Independent of the Jacobi-Trudi path; used only to cross-check it.
/// The names must be pairwise distinct.
LaurentPoly schur_bialternant_oracle(const Partition& lambda, const std::vector<std::string>& names);

/// Compares sum_{|lambda|<=order} s_lambda(a) s_lambda(b) X^|lambda| with the
/// expansion of prod_{i<=n, j<=m} (1 - a_i b_j X)^-1, one check per degree.
SuiteReport cauchy_check(int n, int m, int order);

}  // namespace whitlocal
