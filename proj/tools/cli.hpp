#pragma once

#include <iosfwd>

namespace qconnect::cli {

/// Exit codes of the qconnect tool.
enum ExitCode : int { success = 0, check_failed = 1, usage_error = 2 };

/// Runs the tool on argv, writing results to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qconnect::cli
