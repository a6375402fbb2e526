#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ltmv::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kNumericError = 3,
    kGateFailure = 4,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ltmv::cli
