// Command-line front end; run() is the whole program minus process exit.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qaff::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qaff::cli
