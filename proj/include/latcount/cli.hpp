#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latcount::cli {

enum ExitCode : int { ok = 0, usage = 1, parse = 2, semantic = 3, verify_mismatch = 4 };

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latcount::cli
