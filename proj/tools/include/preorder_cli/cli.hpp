#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace preorder::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kInconsistency = 3 };

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, logs and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Column names of the stats CSV, in order.
const std::vector<std::string>& stats_columns();

/// Linear-interpolation quantile of unsorted values; q in [0, 1].
double quantile(std::vector<double> values, double q);

}  // namespace preorder::cli
