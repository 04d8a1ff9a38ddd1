#pragma once

#include <optional>
#include <vector>

#include "qtaft/action.hpp"

namespace qtaft {

/// Free parameters of a rotation-type action family. The gamma table is
/// grown from gamma0 by the ladder gamma_{i+1} = xi_{i mod tau} gamma_i;
/// the sigma table is grown from the seeds c, c_star by the coefficient
/// recurrences attached to d in {1, 2, n-1, n-2}.
struct RotationParams {
  int n = 3;
  long r = 2;
  long m = 2;
  int d = 1;
  long lambda_exponent = 1;  // lambda = zeta_r^lambda_exponent
  CycNum gamma0;
  std::vector<CycNum> xi;  // one entry per vertex orbit; ignored when gamma0 = 0
  std::vector<CycNum> mu;
  std::vector<CycNum> mu_star;
  CycNum c;
  CycNum c_star;
  long field_order = 0;  // 0 = lcm(m, n, 4)
};

/// Free parameters of a reflection-type action family; r = 2 and
/// lambda = -1 are forced, and mu_star = mu^{-1}.
struct ReflectionParams {
  int n = 3;
  long m = 2;
  int d = 1;
  std::vector<CycNum> mu;
  CycNum gamma_seed;
  /// Sign (+1/-1) of c_j at each fixed vertex j (default +1).
  std::map<int, int> axis_vertex_signs;
  /// Seed c_k for each axis passing between k and k+1 (default 0).
  std::map<int, CycNum> axis_edge_seeds;
  long field_order = 0;
};

/// Free parameters of the exceptional four-vertex, half-turn family with
/// possibly non-nilpotent sigma; r = 2, lambda = -1, mu_i mu_i^* = -1.
struct ExceptionalParams {
  long m = 2;
  std::vector<CycNum> mu;  // 4 entries
  CycNum gamma0;
  CycNum c;
  CycNum c_star;
  long field_order = 0;
};

/// A constructor either yields a spec (with its passing report) or the
/// failing report; never a partial spec.
struct BuildOutcome {
  std::optional<ActionSpec> spec;
  ConstraintReport report;
  bool ok() const { return spec.has_value(); }
};

BuildOutcome build_rotation(const RotationParams& params);
BuildOutcome build_reflection(const ReflectionParams& params);
BuildOutcome build_exceptional_half_turn(const ExceptionalParams& params);

/// Every applicable scalar-level condition that a genuine action on the
/// preprojective quotient must satisfy, one named entry per condition.
/// A spec passing the operator-level verification must pass all of these;
/// a counterexample would falsify the classification.
ConstraintReport check_necessary(const ActionSpec& spec);

/// Fixed vertices (g.j = j) of a reflection spec's vertex permutation.
std::vector<int> reflection_fixed_vertices(int n, int d);
/// Vertices k with g.k = k+1 (the axis passes between k and k+1).
std::vector<int> reflection_edge_vertices(int n, int d);

/// The one degree <= 1 path allowed by the sigma sandwich rule for this
/// arrow, if any: source s(a), target g.t(a).
std::optional<PathWord> sigma_shape_path(const ActionSpec& spec, const Arrow& a);

/// Grid search over raw parameter tables. Every grid point is assembled
/// directly (no family constructor), filtered by the cheap structural and
/// descent conditions, then operator-verified; surviving inner-faithful
/// specs are deduplicated up to overall scaling of (gamma, sigma) and
/// finally tested against check_necessary.
struct EnumerationGrid {
  int n = 3;
  long r = 2;
  long m = 2;
  ActionKind kind = ActionKind::rotation;
  std::vector<int> d_values;  // empty = all of 0..n-1
  long mu_grid_order = 2;     // mu, mu_star entries range over <zeta_order>
  std::vector<CycNum> gamma_seeds = {CycNum(1)};
  std::vector<CycNum> sigma_seeds = {CycNum(0)};
  bool all_primitive_lambdas = true;
  long budget = 2'000'000;
  int verify_degree = 0;  // 0 = 2n
  long field_order = 0;
};

struct EnumerationOutcome {
  std::vector<ActionSpec> valid;
  /// Failed necessary-condition entries found among valid specs; empty
  /// unless the classification is contradicted.
  ConstraintReport violations;
  /// Per-check pass counts of check_necessary across the valid specs.
  std::map<std::string, long> necessary_pass_counts;
  long total_points = 0;
  long structural_rejects = 0;
  long descent_rejects = 0;
  long operator_rejects = 0;
  long not_inner_faithful = 0;
  long duplicates = 0;

  std::string summary() const;
};

EnumerationOutcome enumerate_actions(const EnumerationGrid& grid);

}  // namespace qtaft
