#pragma once

// Command-line front end: `contbern <command> [args] [flags]`.

#include <ostream>
#include <string>
#include <vector>

namespace contbern::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotConverged = 3;

/// Parses `args` (without the program name), runs the command and writes
/// the document to `out`; diagnostics and usage go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace contbern::cli
