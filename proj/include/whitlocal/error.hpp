#pragma once

#include <stdexcept>
#include <string>

namespace whitlocal {

enum class ErrorCode {
  InvalidArgument = 1,
  ParseError,
  NotExpandable,
  UnboundVariable,
  DivisionByZero,
  NegativeUnderHalfExponent,
  VariableMismatch,
  InexactDivision,
  ZeroSatakeParameter,
  EnumerationTooLarge,
  UnsupportedConductor,
  RankMismatch,
  SymbolCollision,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace whitlocal
