#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modsep {

/// Runs the command-line tool on `args` (without the program name).
/// Results go to `out`, diagnostics to `err`.  Returns the process exit
/// code: 0 success, 1 a verification or audit check failed, 2 usage or
/// input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace modsep
