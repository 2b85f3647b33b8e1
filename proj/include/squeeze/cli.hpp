#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace squeeze::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kCertificationFailure = 2 };

/// Runs one command line (without the program name). The result document
/// goes to `out`, diagnostics to `err`; `in` backs `verify --in -`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace squeeze::cli
