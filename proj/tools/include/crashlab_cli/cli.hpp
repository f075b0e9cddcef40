#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crashlab::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a bound or trace check failed
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitScript = 4;

// Runs one command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace crashlab::cli
