#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gm::cli {

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;   // bad mathematical input, overflow
inline constexpr int kExitResource = 2; // limits, quadrature failure, I/O
inline constexpr int kExitUsage = 64;   // unknown flag, malformed option
inline constexpr int kExitOther = 70;   // failed self-test, internal error

/// Parses "a,b,c" or "geom:lo:hi:n" into a list of y values.
std::vector<double> parse_grid(std::string const &spec);

/// Entry point shared by the gm binary and the tests.
int run(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace gm::cli
