#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace basesize::cli {

/// Process exit codes.
enum ExitCode : int {
    ok = 0,
    invalid_input = 2,
    capacity_exceeded = 3,
    internal_failure = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// JSON result document to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace basesize::cli
