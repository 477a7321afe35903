#pragma once

#include <ostream>

#include "magspec/cli/config.hpp"
#include "magspec/cli/report.hpp"

namespace magspec::cli {

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 2,
  kHypothesisViolation = 3,
  kNumericalFailure = 4,
};

/// Runs one command and returns its table. Whole-command failures throw
/// magspec::Error; per-sample failures land in Report::errors.
Report execute(const RunConfig& config);

/// Executes and writes the report (and an error manifest, if any) to the
/// configured destination. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Entry point shared by the executable and the tests.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace magspec::cli
