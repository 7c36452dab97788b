#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace winopt::cli {

/// Exit codes: 0 success, 1 model/run error, 2 missing input files, others
/// from argument parsing.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitMissingInput = 2;

/// Runs `winopt <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace winopt::cli
