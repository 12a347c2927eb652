#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace peaks::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kRefused = 2;

/// Runs one command line (without the program name). The payload goes to
/// `out` (and to --out when given), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peaks::cli
