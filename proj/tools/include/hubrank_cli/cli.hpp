#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hubrank::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kParameterError = 2,
    kNumericalError = 3,
};

/**
 * Runs the hubrank command line. args[0] is the program name. Results go to
 * `out` (or the --out file) only when the command succeeds; diagnostics and
 * error messages go to `err`.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hubrank::cli
