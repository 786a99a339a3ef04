#pragma once

#include <ostream>

namespace cyclic::app {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2, kExitVerifyFailed = 3 };

/// Parses argv and runs one subcommand; output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclic::app
