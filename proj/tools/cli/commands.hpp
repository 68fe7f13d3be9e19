#pragma once

#include <iosfwd>

namespace shockcast::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // analysis or validation failure
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;       // I/O, network or input-data error

// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shockcast::cli
