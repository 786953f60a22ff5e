#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace legscale::cli {

/// Exit codes of the legscale tool.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kIoError = 3,
};

/// Runs one invocation. args excludes the program name. Normal output goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace legscale::cli
