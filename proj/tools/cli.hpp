#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace limbforge::cli {

/// Runs one command line (without the program name). Machine output goes to
/// `out`, diagnostics to `err`, and "-" as a file name reads `in`.
/// Returns 0 on success, 2 for usage or validation errors, 1 otherwise.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace limbforge::cli
