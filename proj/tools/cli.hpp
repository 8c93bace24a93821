#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fairkg::cli {

enum ExitStatus : int { kSuccess = 0, kDataError = 1, kUsageError = 2 };

/// Runs the fairkg command line. `args` excludes the program name. Data goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fairkg::cli
