#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crenrich::cli {

enum ExitCode : int {
  kOk = 0,
  kNumericFailure = 1,
  kConfigError = 2,
  kParseError = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Expands "f1..f3,f5" into {"f1", "f2", "f3", "f5"}.
std::vector<std::string> expand_function_list(const std::string& text);

}  // namespace crenrich::cli
