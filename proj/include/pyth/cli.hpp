#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pyth::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int { Success = 0, DomainRejection = 1, Usage = 2 };

/// Runs the command line `args` (without the program name) and returns the
/// process exit status. All normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pyth::cli
