#pragma once

#include <iosfwd>

namespace kahler {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitPrecondition = 2, kExitResource = 3 };

/// Runs the `kahler` command line. Data goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kahler
