#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gallai::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kViolated = 1, kUsage = 2, kBudget = 3 };

/// Runs one command line (without the program name). The JSON report goes
/// to `out`; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gallai::cli
