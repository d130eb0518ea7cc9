#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cdlat {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,  // bad flags, unreadable or malformed input
  kExitLimit = 2,         // order cap or enumeration budget exceeded
  kExitChecksFailed = 3,  // verify found failures or errors
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdlat
