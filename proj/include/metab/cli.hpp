#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metab {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitLimit = 3,
};

/// Runs the `metab` command line. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metab
