#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellschub {

/// Exit statuses of run_cli.
enum ExitCode : int { kExitOk = 0, kExitFailures = 1, kExitUsage = 2, kExitRuntime = 3 };

/// Runs the command line `args` (without the program name). Normal output goes
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellschub
