#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catalan_lab {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Name of the environment variable that overrides the enumeration ceiling.
inline constexpr const char* kMaxNEnv = "CATALAN_LAB_MAX_N";

// Runs the command line (argv[0] is the program name) and returns the exit
// code. Normal output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Same, with `args` excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catalan_lab
