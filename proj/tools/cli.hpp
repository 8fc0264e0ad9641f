#pragma once

#include <ostream>

namespace extcat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitSelftestFailed = 3;

/// Entry point shared by the binary and the tests. Normal output goes to
/// `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace extcat::cli
