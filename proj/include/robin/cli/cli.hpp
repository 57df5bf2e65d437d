#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace robin::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,          ///< unexpected internal error
    kUsage = 2,
    kPropertyViolation = 3,
    kBoundViolation = 4,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace robin::cli
