#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcol::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageOrIo = 1;
inline constexpr int kVerifyFailed = 2;
inline constexpr int kAsymmetric = 3;

/// Entry point of the `gcol` tool: color, verify, generate and bench
/// subcommands. Normal output goes to `out`, diagnostics and usage to `err`.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcol::cli
