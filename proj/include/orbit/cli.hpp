#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbit {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitWordSize = 3,
};

/// Runs `orbitctl` with `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbit
