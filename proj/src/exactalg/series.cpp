#include "whitlocal/series.hpp"

#include <algorithm>

#include "whitlocal/error.hpp"

namespace whitlocal {

namespace {

void check_coefficient(const LaurentPoly& c, VarId id, const std::string& var) {
  if (c.mentions(id)) throw Error(ErrorCode::InvalidArgument, "series coefficient mentions the series variable " + var);
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::string var, int order) : var_(std::move(var)) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  intern_variable(var_);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(std::string var, std::vector<LaurentPoly> coeffs)
    : var_(std::move(var)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "series needs at least one coefficient");
  VarId id = intern_variable(var_);
  for (const auto& c : coeffs_) check_coefficient(c, id, var_);
}

TruncatedSeries TruncatedSeries::from_poly(const LaurentPoly& p, const std::string& var, int order) {
  TruncatedSeries out(var, order);
  for (const auto& [twice, c] : p.split_by(intern_variable(var))) {
    if (twice < 0 || twice % 2 != 0)
      throw Error(ErrorCode::NotExpandable, "polynomial has a non-series power of " + var + ": " + p.to_string());
    int k = twice / 2;
    if (k <= order) out.coeffs_[static_cast<std::size_t>(k)] = c;
  }
  return out;
}

TruncatedSeries TruncatedSeries::one(const std::string& var, int order) {
  TruncatedSeries out(var, order);
  out.coeffs_[0] = LaurentPoly(1);
  return out;
}

void TruncatedSeries::add_to(int k, const LaurentPoly& value) {
  check_coefficient(value, intern_variable(var_), var_);
  coeffs_.at(static_cast<std::size_t>(k)) += value;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (var_ != other.var_)
    throw Error(ErrorCode::VariableMismatch, "series in " + var_ + " combined with series in " + other.var_);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
  check_compatible(other);
  TruncatedSeries out(var_, std::min(order(), other.order()));
  for (int k = 0; k <= out.order(); ++k) out.coeffs_[k] = coeffs_[k] + other.coeffs_[k];
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
  check_compatible(other);
  TruncatedSeries out(var_, std::min(order(), other.order()));
  for (int k = 0; k <= out.order(); ++k) out.coeffs_[k] = coeffs_[k] - other.coeffs_[k];
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  check_compatible(other);
  TruncatedSeries out(var_, std::min(order(), other.order()));
  for (int k = 0; k <= out.order(); ++k)
    for (int i = 0; i <= k; ++i) out.coeffs_[k].add_product(coeffs_[i], other.coeffs_[k - i]);
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const LaurentPoly& factor) const {
  check_coefficient(factor, intern_variable(var_), var_);
  TruncatedSeries out(var_, order());
  for (int k = 0; k <= order(); ++k) out.coeffs_[k] = coeffs_[k] * factor;
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order > order()) throw Error(ErrorCode::InvalidArgument, "cannot raise the order of a truncated series");
  return TruncatedSeries(var_, std::vector<LaurentPoly>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

LaurentPoly TruncatedSeries::to_poly() const {
  LaurentPoly out;
  for (int k = 0; k <= order(); ++k) out += coeffs_[k] * LaurentPoly::variable(var_, k);
  return out;
}

bool TruncatedSeries::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const LaurentPoly& c) { return c.is_zero(); });
}

nlohmann::json TruncatedSeries::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) coeffs.push_back(c.to_string());
  return {{"var", var_}, {"order", order()}, {"coeffs", coeffs}};
}

TruncatedSeries series_expand(const RationalFunction& f, const std::string& var, int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  VarId id = intern_variable(var);
  auto den_parts = f.den().split_by(id);
  auto num_parts = f.num().split_by(id);
  for (const auto& parts : {&den_parts, &num_parts})
    for (const auto& [twice, c] : *parts)
      if (twice % 2 != 0) throw Error(ErrorCode::NotExpandable, "half-integer power of " + var);

  // f = var^shift * N / D with D(0) != 0.
  int shift = -den_parts.begin()->first / 2;
  std::vector<LaurentPoly> d(static_cast<std::size_t>(order) + 1);
  for (const auto& [twice, c] : den_parts) {
    int k = twice / 2 + shift;
    if (k <= order) d[static_cast<std::size_t>(k)] = c;
  }
  auto unit = d[0].single_term();
  if (!unit)
    throw Error(ErrorCode::NotExpandable,
                "constant coefficient " + d[0].to_string() + " of the denominator is not invertible");
  LaurentPoly inv = d[0].inverse();

  std::vector<LaurentPoly> n(static_cast<std::size_t>(order) + 1);
  for (const auto& [twice, c] : num_parts) {
    int k = twice / 2 + shift;
    if (k < 0)
      throw Error(ErrorCode::NotExpandable, "expansion of " + f.to_string() + " has negative powers of " + var);
    if (k <= order) n[static_cast<std::size_t>(k)] = c;
  }

  std::vector<LaurentPoly> g(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    LaurentPoly acc = n[k];
    for (int i = 1; i <= k; ++i)
      if (!d[i].is_zero() && !g[k - i].is_zero()) acc -= d[i] * g[k - i];
    g[k] = acc * inv;
  }
  return TruncatedSeries(var, std::move(g));
}

bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.var() != b.var()) throw Error(ErrorCode::VariableMismatch, a.var() + " vs " + b.var());
  int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

}  // namespace whitlocal
