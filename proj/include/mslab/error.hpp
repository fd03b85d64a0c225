#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mslab {

enum class ErrorCode {
  RingMismatch,
  DivisionByZero,
  Ambiguous,
  ZeroInput,
  ParseError,
  UnsupportedReduction,
  DegenerateDiagonal,
  NotNormalized,
  NotPrime,
  NotCoprime,
  BudgetExhausted,
  BadWeight,
  Degenerate,
  BadPair,
  NotInRadical,
  BadInput,
  PreconditionViolated,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported through this type.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public MathError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : MathError(ErrorCode::ParseError, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mslab
