#pragma once

#include <string>
#include <vector>

namespace gm {

struct SelfCheck
{
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Quick invariant suites (a few seconds): symbol oracle, supplements, Gauss
/// sums, weight identity, constants, lattice count, sweep determinism.
std::vector<SelfCheck> run_selftest(int threads);

} // namespace gm
