#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace waring::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kResourceRefusal = 3,
};

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace waring::cli
