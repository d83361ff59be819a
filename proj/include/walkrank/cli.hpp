#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walkrank::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
/// pagerank-demo found entries that differ from the reference digits.
inline constexpr int kMismatch = 1;
/// Invalid flags, unreadable or malformed input, infeasible parameters.
inline constexpr int kInvalid = 2;
/// Solver failure (no convergence, capacity exceeded).
inline constexpr int kFailure = 3;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace walkrank::cli
