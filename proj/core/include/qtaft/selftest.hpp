#pragma once

#include <cstdint>
#include <iosfwd>

#include "qtaft/classify.hpp"
#include "qtaft/invariants.hpp"

namespace qtaft {

/// The three-vertex rotation action with r = m = 3, d = 1, unit mu tables,
/// gamma_i = lambda^{-i} and sigma = 0.
ActionSpec example_rotation_action();

/// The three-vertex reflection action with m = 2, axis through vertex 1,
/// unit mu tables, gamma = (1, 0, -1) and the forced sigma values.
ActionSpec example_reflection_action();

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// The full property suite: rewriting confluence and dimensions, operator
/// verification of the sample actions, small-grid classification searches,
/// the exceptional four-vertex family, closed-form invariant identities,
/// the invariants-equal-center comparison, and orbit-count dimensions.
/// Deterministic for a fixed seed. Progress lines go to `progress` when
/// given.
std::vector<CriterionResult> run_selftest(std::uint64_t seed,
                                          std::ostream* progress = nullptr);

}  // namespace qtaft
