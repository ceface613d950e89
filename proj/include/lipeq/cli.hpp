#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lipeq::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitEquivalent = 0;
inline constexpr int kExitNotEquivalent = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitInternal = 70;

// Dispatches one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lipeq::cli
