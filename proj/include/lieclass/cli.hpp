#pragma once

#include <iosfwd>

namespace lieclass {

/// Exit codes of the command-line driver.
enum ExitCode : int { exit_ok = 0, exit_validation = 1, exit_parse = 2 };

/// Runs one `lieclass` command. argv[0] is the program name. Results go to
/// `out`, diagnostics to `err`.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lieclass
