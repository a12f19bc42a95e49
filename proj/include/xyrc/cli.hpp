#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xyrc::cli {

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kInputError = 2 };

/// Entry point for the `xyrc` tool. args[0] is the program name. JSON results
/// go to `out` (or --out FILE); the human-readable table and all diagnostics go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xyrc::cli
