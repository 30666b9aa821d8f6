#pragma once

#include <nlohmann/json.hpp>

#include "whitlocal/laurent.hpp"

namespace whitlocal {

/// num / den over the Laurent ring. No gcd reduction is attempted; the pair is
/// only scaled so that the canonically least denominator monomial has
/// coefficient 1. Equality is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(const LaurentPoly& num) : RationalFunction(num, LaurentPoly(1)) {}  // NOLINT
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }

  RationalFunction operator*(const RationalFunction& other) const;
  RationalFunction operator/(const RationalFunction& other) const;
  RationalFunction operator+(const RationalFunction& other) const;
  RationalFunction operator-(const RationalFunction& other) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace whitlocal
