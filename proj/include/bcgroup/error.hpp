#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcgroup {

enum class ErrorKind {
  // core-group
  NotABijection,
  ParamsMismatch,
  GroupTooLarge,
  InvalidArgument,
  MalformedInput,
  // order-analysis
  NonPositive,
  PrimeNotPresent,
  NotADivisor,
  TooLarge,
  // subgroup-engine / representation
  ClosureExceedsCap,
  StateSpaceTooLarge,
  SizeMismatch,
  TooLargeForExhaustive,
  // trace-sim
  MalformedLine,
  InvariantViolation,
  SourceMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception carrying one of the library's error kinds; callers (the CLI in
/// particular) dispatch on kind() rather than on the message text.
class GroupError : public std::runtime_error {
 public:
  GroupError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw GroupError(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace bcgroup
