#ifndef ELLGW_CLI_HPP
#define ELLGW_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ellgw
{

enum ExitCode : int {
    exit_ok = 0,
    exit_mismatch = 1,
    exit_invalid = 2,
};

// Runs the command line `args` (args[0] is the program name) and returns the
// process exit code. Results go to `out`, diagnostics and usage to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ellgw

#endif
