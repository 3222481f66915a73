#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace proxyvote {

// Exit codes: 0 success, 1 error raised by the library, 2 usage error.
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming the directory that holds ratings.csv,
// genome-scores.csv and movies.csv for `sweep`.
inline constexpr const char* kDataDirEnv = "PROXYVOTE_DATA_DIR";

/// Entry point of the `proxyvote` tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proxyvote
