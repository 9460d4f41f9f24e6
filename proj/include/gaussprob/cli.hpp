#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaussprob {

/// Runs the command-line tool on `args` (without the program name). Data goes
/// to `out`, diagnostics to `err`. Returns the process exit code: 0 on
/// success, 1 on a computation error, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaussprob
