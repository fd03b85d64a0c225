#include "mslab/error.hpp"

namespace mslab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RingMismatch: return "RING_MISMATCH";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::Ambiguous: return "AMBIGUOUS";
    case ErrorCode::ZeroInput: return "ZERO_INPUT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnsupportedReduction: return "UNSUPPORTED_REDUCTION";
    case ErrorCode::DegenerateDiagonal: return "DEGENERATE_DIAGONAL";
    case ErrorCode::NotNormalized: return "NOT_NORMALIZED";
    case ErrorCode::NotPrime: return "NOT_PRIME";
    case ErrorCode::NotCoprime: return "NOT_COPRIME";
    case ErrorCode::BudgetExhausted: return "BUDGET_EXHAUSTED";
    case ErrorCode::BadWeight: return "BAD_WEIGHT";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::BadPair: return "BAD_PAIR";
    case ErrorCode::NotInRadical: return "NOT_IN_RADICAL";
    case ErrorCode::BadInput: return "BAD_INPUT";
    case ErrorCode::PreconditionViolated: return "PRECONDITION_VIOLATED";
  }
  return "UNKNOWN";
}

}  // namespace mslab
