#pragma once

namespace baker::cli {

/// Parses argv, runs one subcommand and returns the process exit status:
/// 0 success, 2 validation error, 3 cap exceeded, 4 solver failure.
int run(int argc, const char* const* argv);

}  // namespace baker::cli
