#pragma once

#include <ostream>

namespace eqsub::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitChecksum = 3;
inline constexpr int kExitUsage = 64;

/// Runs one command line (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqsub::cli
