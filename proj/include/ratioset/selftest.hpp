#pragma once

#include <string>
#include <vector>

#include "ratioset/rational.hpp"

namespace ratioset {

struct SelfTestItem {
  std::string name;
  bool passed = false;
  /// Empty on success; otherwise "expected X, got Y" for the first mismatch.
  std::string detail;
};

/// Compares gamma_1..gamma_k at alpha = 1/2 against 1 + (-1)^i / F_{i+2}^2.
SelfTestItem check_gamma_table(const std::vector<Rational>& gammas);

/// Runs the invariant suite. `quick` trims grids to finish in well under
/// ten seconds.
std::vector<SelfTestItem> run_selftest(bool quick);

}  // namespace ratioset
