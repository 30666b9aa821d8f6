#include "whitlocal/rational.hpp"

#include <cctype>

#include "whitlocal/error.hpp"

namespace whitlocal {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotExpandable: return "NotExpandable";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NegativeUnderHalfExponent: return "NegativeUnderHalfExponent";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::ZeroSatakeParameter: return "ZeroSatakeParameter";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::UnsupportedConductor: return "UnsupportedConductor";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::SymbolCollision: return "SymbolCollision";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  BigInt d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const BigInt& value) { return value.get_str(10); }

bool exact_sqrt(const Rational& value, Rational& root) {
  if (sgn(value) < 0) return false;
  const BigInt& num = value.get_num();
  const BigInt& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  root = Rational(BigInt(sqrt(num)), BigInt(sqrt(den)));
  root.canonicalize();
  return true;
}

}  // namespace whitlocal
