#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `seqsum <args...>` (args excludes the program name)
/// and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqsum::cli
