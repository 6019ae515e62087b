#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eulergas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Data goes to out,
/// diagnostics and serialized errors to err. Returns 0, 1 (convergence or
/// precision failure) or 2 (usage or invalid parameter).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulergas::cli
