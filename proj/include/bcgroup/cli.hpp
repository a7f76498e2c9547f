#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bcgroup/error.hpp"

namespace bcgroup::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyViolation = 1,
  kBadArguments = 2,
  kCapExceeded = 3,
  kPreconditionUnmet = 4,
  kInvalidInput = 5,
};

int exit_code_for(ErrorKind kind) noexcept;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcgroup::cli
