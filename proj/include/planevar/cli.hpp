#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planevar {

/// Exit codes of the command-line front end.
enum ExitCode : int { kAllPassed = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one command line (args[0] is the program name).  Human-readable
/// results go to `out`, diagnostics to `err`; the report is written to the
/// --out file when given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planevar
