#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circode {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitRefuted = 2, kExitInconclusive = 3 };

/// Runs the `circode` tool; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circode
