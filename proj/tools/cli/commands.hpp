#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace noisygen::cli {

/// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kPropertyFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kInconclusive = 3;

/// Runs one `ngen` command. `args` excludes the program name. Output goes to
/// `out`, diagnostics to `err`; `serve` talks over the process's stdin/stdout.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noisygen::cli
