#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdmm::cli {

enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,
  kError = 2,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. All output goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tdmm::cli
