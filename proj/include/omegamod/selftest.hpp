#pragma once

#include <string>
#include <vector>

#include "omegamod/sieve.hpp"

namespace omegamod {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  StreamOptions stream;
  // Bumps one Omega value in the sieve output before the checks run.
  bool inject_fault = false;
};

/// Reduced-scale (x <= 1e5) oracle, transform, identity and race checks.
std::vector<SelftestCheck> run_selftest(const SelftestOptions& options = {});

}  // namespace omegamod
