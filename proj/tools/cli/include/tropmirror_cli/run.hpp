#pragma once

#include <ostream>

#include "tropmirror/error.hpp"
#include "tropmirror_cli/config.hpp"

namespace tropmirror::cli {

enum ExitCode : int {
  kOk = 0,
  kBadInput = 1,
  kDomainError = 2,
  kNeedsPlane = 3,
  kMismatch = 4,
};

int exit_code_for(ErrorCode code);

// Runs one job, writing artifacts under config.out and a summary to `out`.
// Errors are reported on `err`; the return value is the process exit code.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tropmirror::cli
