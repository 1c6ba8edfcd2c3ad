#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cascade::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kInvariantBreach = 3,
  kResourceBudget = 4,
};

/// Runs the command line `args` (program name excluded). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cascade::cli
