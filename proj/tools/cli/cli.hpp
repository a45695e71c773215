#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cccmap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;      // usage, parse and validation errors
inline constexpr int kExitNumerical = 3;  // Singularity, DegenerateVariance, NotConverged, NoConjugate

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cccmap::cli
