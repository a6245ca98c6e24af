#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plates::cli {

enum ExitCode : int {
    kPass = 0,
    kVerificationFailed = 1,
    kUsage = 2,
};

/// Runs one command line (without the program name). Results go to out,
/// diagnostics and usage errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plates::cli
