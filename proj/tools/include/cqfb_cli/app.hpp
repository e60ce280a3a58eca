#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cqfb::cli {

enum ExitCode : int { kExitOk = 0, kExitPartialFailure = 1, kExitUsage = 2 };

/// Entry point of the `cqfb` tool. `args` excludes the program name. Normal
/// output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cqfb::cli
