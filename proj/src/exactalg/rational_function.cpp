#include "whitlocal/rational_function.hpp"

#include "whitlocal/error.hpp"

namespace whitlocal {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  const Monomial* least = nullptr;
  for (const auto& [m, c] : den_.terms())
    if (least == nullptr || Monomial::compare_canonical(m, *least) < 0) least = &m;
  Rational scale = den_.coefficient(*least);
  if (scale != 1) {
    LaurentPoly inv(1 / scale);
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
  return {num_ * other.num_, den_ * other.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
  if (other.num_.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational function");
  return {num_ * other.den_, den_ * other.num_};
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
  if (den_ == other.den_) return {num_ + other.num_, den_};
  return {num_ * other.den_ + other.num_ * den_, den_ * other.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& other) const {
  if (den_ == other.den_) return {num_ - other.num_, den_};
  return {num_ * other.den_ - other.num_ * den_, den_ * other.den_};
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

nlohmann::json RationalFunction::to_json() const {
  return {{"num", num_.to_string()}, {"den", den_.to_string()}};
}

}  // namespace whitlocal
