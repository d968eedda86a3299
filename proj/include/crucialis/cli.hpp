#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crucialis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command. `args` excludes the program name.
///
///   crucialis <construct|check|decompose|profile|search|table> [flags]
///
/// Verdict commands (check, decompose, profile, search) print a single
/// "RESULT: ..." line before any detail.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crucialis::cli
