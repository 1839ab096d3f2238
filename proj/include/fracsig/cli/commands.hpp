#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracsig::cli {

enum ExitCode : int {
    kSuccess = 0,
    kRuntimeError = 1,
    kConfigError = 2,
    kValidationFailed = 3,
};

/// Runs one command line (args excludes the program name) and returns its exit code.
///
///     simulate <config> --out <signal.csv>
///     analyze  <signal.csv> [--spectrum <out.csv>] [--hurst] [--hurst-out <out.csv>] [--config <cfg>]
///     validate <signal.csv> --band <low:high> --freq <Hz> --tol <Hz>
///     compare  <a.csv> <b.csv>
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fracsig::cli
