#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace omegamod::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kIoError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace omegamod::cli
