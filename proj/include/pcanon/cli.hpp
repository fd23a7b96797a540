#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pcanon {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapExceeded = 3 };

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcanon
