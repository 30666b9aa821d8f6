#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "whitlocal/laurent.hpp"
#include "whitlocal/rational_function.hpp"

namespace whitlocal {

/// A power series in one distinguished variable, known up to and including
/// degree order(). Coefficients never mention the series variable.
class TruncatedSeries {
 public:
  TruncatedSeries(std::string var, int order);
  TruncatedSeries(std::string var, std::vector<LaurentPoly> coeffs);

  /// Reads a polynomial as a series; negative or fractional powers of var are rejected.
  static TruncatedSeries from_poly(const LaurentPoly& p, const std::string& var, int order);
  static TruncatedSeries one(const std::string& var, int order);

  const std::string& var() const noexcept { return var_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<LaurentPoly>& coeffs() const noexcept { return coeffs_; }
  const LaurentPoly& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  void add_to(int k, const LaurentPoly& value);

  TruncatedSeries operator+(const TruncatedSeries& other) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  /// Cauchy product truncated at min(order, other.order).
  TruncatedSeries operator*(const TruncatedSeries& other) const;
  TruncatedSeries scaled(const LaurentPoly& factor) const;
  TruncatedSeries truncated(int order) const;

  /// Sum of c_k * var^k as a polynomial.
  LaurentPoly to_poly() const;
  bool is_one() const;

  nlohmann::json to_json() const;

 private:
  void check_compatible(const TruncatedSeries& other) const;

  std::string var_;
  std::vector<LaurentPoly> coeffs_;
};

/// Coefficients of f up to var^order. The denominator may carry a pure
/// monomial factor in var, which is cleared first; the remaining constant
/// coefficient must be a unit of the Laurent ring (NotExpandable otherwise).
TruncatedSeries series_expand(const RationalFunction& f, const std::string& var, int order);

/// Exact agreement up to the smaller of the two orders. VariableMismatch when
/// the series variables differ.
bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace whitlocal
