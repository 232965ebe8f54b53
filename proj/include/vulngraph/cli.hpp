#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vulngraph {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitPrecondition = 3,
};

/// Entry point behind tools/main.cpp. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vulngraph
