#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qplab::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name), writing to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qplab::cli
