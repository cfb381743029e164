#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace descent {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitIdentityFailed = 1,
    kExitUsage = 2,
    kExitInternal = 3,
};

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns one of ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descent
