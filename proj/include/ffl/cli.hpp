#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ffl::cli {

/// Exit statuses of run().
enum Status : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kComputation = 3 };

/// Runs one command line (without the program name). Results go to `out` (or the
/// --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffl::cli
