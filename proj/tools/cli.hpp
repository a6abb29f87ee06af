#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latmorph::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefused = 3;

/// Runs one command line (args exclude the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latmorph::cli
