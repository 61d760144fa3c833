#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace resonance::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kMismatch = 2,
  kIoError = 3,
};

/// Runs one invocation. `args` excludes the program name. Data goes to `out`
/// (or the --out file), reports and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resonance::cli
