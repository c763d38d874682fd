#pragma once

#include <iosfwd>

namespace mvsbm {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_io = 3;
inline constexpr int exit_numeric = 4;

/// Entry point of the mvsbm command line tool. Normal output goes to `out`,
/// diagnostics (and a derived seed) to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mvsbm
