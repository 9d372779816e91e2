#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cascade_duel::cli {

/// Exit status for usage errors (unknown flag, bad value).
inline constexpr int kUsageError = 2;

/// Runs the command line `args` (args[0] is the program name). Normal
/// output goes to `out`, diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splices `key = value` lines of the file named by `--config` into `args`
/// as `--key=value` ahead of the first flag, so explicit flags win.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

}  // namespace cascade_duel::cli
