#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfhg {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitInvalidInput = 1, kExitDisagreement = 2 };

/// Runs one CLI invocation. `args` excludes the program name. Input given
/// as "-" (or omitted) is read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hopfhg
