#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace whitlocal {

/// Arbitrary precision rationals. mpq_class keeps gcd(num, den) = 1 and den > 0
/// as long as every constructed value goes through canonicalize().
using Rational = mpq_class;
using BigInt = mpz_class;

/// Accepts "p", "-p" and "p/q" (q != 0); whitespace is not allowed.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Exact square root, or false when the argument is not the square of a rational.
bool exact_sqrt(const Rational& value, Rational& root);

}  // namespace whitlocal
