#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fusion::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalidInput = 2, kCheckFailed = 3 };

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics and usage synopses to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fusion::cli
