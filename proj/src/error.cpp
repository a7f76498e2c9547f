#include "bcgroup/error.hpp"

namespace bcgroup {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::ParamsMismatch: return "ParamsMismatch";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::PrimeNotPresent: return "PrimeNotPresent";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorKind::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::SourceMismatch: return "SourceMismatch";
  }
  return "Unknown";
}

}  // namespace bcgroup
