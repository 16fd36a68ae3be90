#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tindep::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,          // domain error, failed verification, uncertified construction
    kBudgetExhausted = 2,
    kUsage = 3,
};

/// Runs one tindep invocation; args excludes the program name.
int run_command(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}  // namespace tindep::cli
