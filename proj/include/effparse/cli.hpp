#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace effparse::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kFound = 0, kNone = 1, kUsage = 2, kExhausted = 3 };

/// Runs one command line (without the program name) and returns its exit
/// status. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace effparse::cli
