#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ambrep {

/// Exit codes of the command line.
enum ExitCode : int { kExitOk = 0, kExitLawFailure = 1, kExitUsage = 2 };

/// Runs the command line with `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ambrep
