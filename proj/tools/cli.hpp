#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quiver::cli {

/// Process exit codes.
enum ExitCode : int {
  ok = 0,             // every check passed or was inapplicable
  check_failed = 1,
  input_error = 2,    // parse errors, bad flags, precondition violations
  numerical_error = 3,
};

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiver::cli
