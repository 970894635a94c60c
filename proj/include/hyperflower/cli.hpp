#pragma once

#include <ostream>

namespace hyperflower {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitBudget = 4;

/// Entry point of the `hyperflower` tool. Data goes to files named by --out
/// (and friends) or to `out`; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperflower
