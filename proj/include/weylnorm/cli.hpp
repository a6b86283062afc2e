#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylnorm {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitCapExceeded = 3,
};

/// Runs the command-line tool; args excludes the program name.
/// Results go to out, headers and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylnorm
