#pragma once

#include <iosfwd>

namespace torinv::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalidInput = 2, kResourceCap = 3 };

/// Parses argv, runs one subcommand and writes the result document to `out`.
/// Diagnostics go to `err`. "-" as a file name reads standard input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace torinv::cli
