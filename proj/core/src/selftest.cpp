#include "qtaft/selftest.hpp"

#include <chrono>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace qtaft {

namespace {

int mod(int value, int n) {
  int r = value % n;
  return r < 0 ? r + n : r;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PathWord random_word(std::mt19937_64& rng, int n, int max_length) {
  std::uniform_int_distribution<int> base_dist(0, n - 1);
  std::uniform_int_distribution<int> length_dist(0, max_length);
  std::uniform_int_distribution<int> star_dist(0, 1);
  const int base = base_dist(rng);
  const int length = length_dist(rng);
  std::vector<Arrow> arrows;
  int at = base;
  for (int i = 0; i < length; ++i) {
    if (star_dist(rng) == 0) {
      arrows.push_back(Arrow{at, false});
      at = mod(at + 1, n);
    } else {
      arrows.push_back(Arrow{mod(at - 1, n), true});
      at = mod(at - 1, n);
    }
  }
  return PathWord(n, base, std::move(arrows));
}

NormalPath random_strategy_normal_form(std::mt19937_64& rng, const PathWord& word) {
  PathWord current = word;
  while (true) {
    const auto positions = rewrite_positions(current);
    if (positions.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, positions.size() - 1);
    current = apply_rewrite(current, positions[pick(rng)]);
  }
  int stars = 0;
  for (const auto& a : current.arrows()) stars += a.starred ? 1 : 0;
  return NormalPath{current.source(), current.length() - stars, stars};
}

CriterionResult criterion_rewriting(std::mt19937_64& rng) {
  CriterionResult result;
  result.name = "rewriting soundness and basis dimensions";
  long words_checked = 0;
  for (const int n : {3, 4, 5, 6}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const PathWord word = random_word(rng, n, 8);
      const NormalPath reference = normal_form(word);
      for (int strategy = 0; strategy < 3; ++strategy) {
        if (!(random_strategy_normal_form(rng, word) == reference)) {
          result.detail = "strategies disagree on " + word.to_string();
          return result;
        }
      }
      ++words_checked;
    }
    for (int ell = 0; ell <= 8; ++ell) {
      const size_t expected = static_cast<size_t>(n) * (ell + 1);
      if (pi_basis(n, ell).size() != expected) {
        result.detail = "basis count mismatch at n = " + std::to_string(n) +
                        ", degree " + std::to_string(ell);
        return result;
      }
      // Every composable word must land on a claimed basis path, and all
      // of them must be reached.
      std::set<NormalPath> reached;
      for (const PathWord& w : graded_basis(n, ell)) reached.insert(normal_form(w));
      if (reached.size() != expected) {
        result.detail = "rewriting reaches " + std::to_string(reached.size()) +
                        " normal forms at n = " + std::to_string(n) + ", degree " +
                        std::to_string(ell);
        return result;
      }
    }
  }
  result.passed = true;
  result.detail = std::to_string(words_checked) + " random words, all strategies agree";
  return result;
}

CriterionResult criterion_sample_actions() {
  CriterionResult result;
  result.name = "sample rotation and reflection actions verify";
  for (const bool reflection : {false, true}) {
    const ActionSpec spec =
        reflection ? example_reflection_action() : example_rotation_action();
    const int degree = 2 * spec.n;
    const ConstraintReport structure = spec.validate_structure();
    const ConstraintReport module = verify_module_algebra(spec, degree);
    const ConstraintReport hopf = verify_hopf_relations(spec, degree);
    if (!structure.all_passed() || !module.all_passed() || !hopf.all_passed()) {
      result.detail = std::string(reflection ? "reflection" : "rotation") +
                      " sample failed:\n" + structure.to_string() + module.to_string() +
                      hopf.to_string();
      return result;
    }
  }
  result.passed = true;
  result.detail = "g^m = id, x^r = 0, g x = lambda x g, descent all hold up to degree 2n";
  return result;
}

CriterionResult criterion_rotation_exhaustion() {
  CriterionResult result;
  result.name = "rotation classification by exhaustion (n = r = m = 3)";
  EnumerationGrid grid;
  grid.n = 3;
  grid.r = 3;
  grid.m = 3;
  grid.kind = ActionKind::rotation;
  grid.d_values = {1, 2};
  grid.mu_grid_order = 3;
  grid.gamma_seeds = {CycNum(1)};
  grid.sigma_seeds = {CycNum(0)};
  grid.all_primitive_lambdas = true;
  grid.verify_degree = 4;
  const EnumerationOutcome outcome = enumerate_actions(grid);
  if (outcome.valid.empty()) {
    result.detail = "no valid actions found";
    return result;
  }
  if (!outcome.violations.entries.empty()) {
    result.detail = "classification violations:\n" + outcome.violations.to_string();
    return result;
  }
  for (const ActionSpec& spec : outcome.valid) {
    CycNum prod(1);
    for (const auto& v : spec.mu) prod *= v;
    if (!prod.is_one()) {
      result.detail = "a valid action has full mu product != 1";
      return result;
    }
  }
  result.passed = true;
  result.detail = std::to_string(outcome.total_points) + " grid points, " +
                  std::to_string(outcome.valid.size()) +
                  " valid actions, zero counterexamples";
  return result;
}

CriterionResult criterion_reflection_forcing() {
  CriterionResult result;
  result.name = "reflection forcing (n = 3, sign grids)";
  EnumerationGrid grid;
  grid.n = 3;
  grid.r = 2;
  grid.m = 2;
  grid.kind = ActionKind::reflection;
  grid.mu_grid_order = 2;
  grid.gamma_seeds = {CycNum(0), CycNum(1)};
  grid.sigma_seeds = {CycNum(0), CycNum(1), CycNum(-1)};
  grid.verify_degree = 4;
  const EnumerationOutcome outcome = enumerate_actions(grid);
  if (outcome.valid.empty()) {
    result.detail = "no valid reflection actions found";
    return result;
  }
  if (!outcome.violations.entries.empty()) {
    result.detail = "classification violations:\n" + outcome.violations.to_string();
    return result;
  }
  for (const ActionSpec& spec : outcome.valid) {
    if (spec.taft.r != 2 || spec.lambda() != CycNum(-1)) {
      result.detail = "a valid reflection action does not have r = 2, lambda = -1";
      return result;
    }
    for (int i = 0; i < spec.n; ++i) {
      if (!(spec.mu[i] * spec.mu_star[i]).is_one()) {
        result.detail = "a valid reflection action has mu_i mu_i^* != 1";
        return result;
      }
    }
  }
  result.passed = true;
  result.detail = std::to_string(outcome.total_points) + " grid points, " +
                  std::to_string(outcome.valid.size()) +
                  " valid actions, all with mu_i mu_i^* = 1";
  return result;
}

CriterionResult criterion_exceptional_family() {
  CriterionResult result;
  result.name = "exceptional four-vertex family (sigma^2 != 0, x^2 = 0)";
  ExceptionalParams params;
  params.m = 2;
  params.mu = {CycNum(1), CycNum(1), CycNum(1), CycNum(1)};
  params.gamma0 = CycNum(1);
  params.c = CycNum(1);
  params.c_star = CycNum(2);
  const BuildOutcome built = build_exceptional_half_turn(params);
  if (!built.ok()) {
    result.detail = "constructor rejected the parameters:\n" + built.report.to_string();
    return result;
  }
  const ActionSpec& spec = *built.spec;
  if (spec.sigma.power_on_arrow(Arrow{0, false}, 4, 2).is_zero()) {
    result.detail = "sigma^2(a_0) vanishes";
    return result;
  }
  const ConstraintReport module = verify_module_algebra(spec, 8);
  const ConstraintReport hopf = verify_hopf_relations(spec, 8);
  if (!module.all_passed() || !hopf.all_passed()) {
    result.detail = "operator verification failed:\n" + module.to_string() + hopf.to_string();
    return result;
  }
  result.passed = true;
  result.detail = "verified action with non-nilpotent sigma on arrows, x^2 = 0 to degree 8";
  return result;
}

CriterionResult criterion_invariant_closed_forms() {
  CriterionResult result;
  result.name = "closed-form x action and products on character orbits";
  const ActionSpec spec = example_rotation_action();
  const long r = spec.taft.r;
  long checked = 0;
  for (long alpha = 0; alpha < r; ++alpha) {
    for (int k = 0; k < spec.n; ++k) {
      for (int degree = 0; degree <= 6; ++degree) {
        for (int u = 0; u <= degree; ++u) {
          const NormalPath p{k, u, degree - u};
          const PiElement direct = act_x(spec, phi(spec, alpha, p));
          PiElement closed = phi(spec, alpha + 1, p);
          closed *= x_on_phi_coefficient(spec, alpha, p);
          if (direct != closed) {
            result.detail = "x on phi_" + std::to_string(alpha) + "(" + p.to_string() +
                            ") disagrees with the closed form";
            return result;
          }
          ++checked;
        }
      }
    }
  }
  long product_checked = 0;
  for (long alpha = 0; alpha < r; ++alpha) {
    for (long beta = 0; beta < r; ++beta) {
      for (int k = 0; k < spec.n; ++k) {
        for (int u = 1; u <= 4; ++u) {
          for (int v = 1; u + v <= 4; ++v) {
            for (int up = 1; u + v + up <= 5; ++up) {
              for (int vp = 1; u + v + up + vp <= 6; ++vp) {
                const NormalPath p{k, u, v};
                const NormalPath q{k, up, vp};
                if (!phi_product(spec, alpha, beta, p, q).holds) {
                  result.detail = "product rule fails for phi_" + std::to_string(alpha) +
                                  "(" + p.to_string() + ") phi_" + std::to_string(beta) +
                                  "(" + q.to_string() + ")";
                  return result;
                }
                ++product_checked;
              }
            }
          }
        }
      }
    }
  }
  result.passed = true;
  result.detail = std::to_string(checked) + " x-action identities and " +
                  std::to_string(product_checked) + " product identities hold exactly";
  return result;
}

CriterionResult criterion_invariants_equal_center() {
  CriterionResult result;
  result.name = "invariants equal the center (single orbit, degree <= 6)";
  const ActionSpec spec = example_rotation_action();
  const InvariantCenterReport report = compare_invariants_center(spec, 6);
  if (!report.closed_form_regime) {
    result.detail = "sample action unexpectedly outside the closed-form regime";
    return result;
  }
  if (!report.invariants_equal_center() || !report.generators_span) {
    result.detail = "comparison failed:\n" + report.to_string();
    return result;
  }
  const InvariantBasis basis = invariant_basis(spec, 6);
  const ConstraintReport predicted = compare_invariants_predicted(spec, basis);
  if (!predicted.all_passed()) {
    result.detail = "orbit prediction failed:\n" + predicted.to_string();
    return result;
  }
  result.passed = true;
  result.detail = "dimensions, mutual containment and generator span all hold";
  return result;
}

CriterionResult criterion_orbit_count_dimensions() {
  CriterionResult result;
  result.name = "degree-0 invariant dimension equals the orbit count";
  struct Case {
    int n;
    int d;
    long r;
  };
  const std::vector<Case> cases = {{4, 2, 2}, {6, 2, 3}, {6, 3, 2}};
  std::ostringstream detail;
  for (const Case& c : cases) {
    BuildOutcome built;
    if (c.n == 4 && c.d == 2) {
      ExceptionalParams params;
      params.m = 2;
      params.mu = {CycNum(1), CycNum(1), CycNum(1), CycNum(1)};
      params.gamma0 = CycNum(1);
      params.c = CycNum(0);
      params.c_star = CycNum(0);
      built = build_exceptional_half_turn(params);
    } else {
      RotationParams params;
      params.n = c.n;
      params.r = c.r;
      params.m = c.r;
      params.d = c.d;
      params.gamma0 = CycNum(1);
      params.mu.assign(c.n, CycNum(1));
      params.mu_star.assign(c.n, CycNum(1));
      const long tau = std::gcd(static_cast<long>(c.n), static_cast<long>(c.d));
      const CycNum lambda_inv =
          CycNum::root_of_unity(default_field_order(c.r, c.n),
                                default_field_order(c.r, c.n) / c.r)
              .inverse();
      // ladder seeds: last orbit representative absorbs the lambda^{-1}
      params.xi.assign(tau, CycNum(1));
      params.xi[tau - 1] = lambda_inv;
      built = build_rotation(params);
    }
    if (!built.ok()) {
      result.detail = "constructor rejected (n, d) = (" + std::to_string(c.n) + ", " +
                      std::to_string(c.d) + "):\n" + built.report.to_string();
      return result;
    }
    const ActionSpec& spec = *built.spec;
    const ConstraintReport module = verify_module_algebra(spec, 4);
    const ConstraintReport hopf = verify_hopf_relations(spec, 4);
    if (!module.all_passed() || !hopf.all_passed()) {
      result.detail = "verification failed for (n, d) = (" + std::to_string(c.n) + ", " +
                      std::to_string(c.d) + ")";
      return result;
    }
    const long expected = std::gcd(static_cast<long>(c.n), static_cast<long>(c.d));
    const size_t dim = invariant_basis(spec, 0).dimension(0);
    if (dim != static_cast<size_t>(expected)) {
      result.detail = "degree-0 dimension " + std::to_string(dim) + " != gcd = " +
                      std::to_string(expected) + " at (n, d) = (" + std::to_string(c.n) +
                      ", " + std::to_string(c.d) + ")";
      return result;
    }
    detail << "(" << c.n << "," << c.d << ")->" << dim << " ";
  }
  result.passed = true;
  result.detail = "dimensions " + detail.str() + "match gcd(n, d)";
  return result;
}

}  // namespace

ActionSpec example_rotation_action() {
  RotationParams params;
  params.n = 3;
  params.r = 3;
  params.m = 3;
  params.d = 1;
  params.gamma0 = CycNum(1);
  const long L = default_field_order(3, 3);
  params.xi = {CycNum::root_of_unity(L, L / 3).inverse()};
  params.mu.assign(3, CycNum(1));
  params.mu_star.assign(3, CycNum(1));
  const BuildOutcome built = build_rotation(params);
  if (!built.ok()) throw std::logic_error("sample rotation action failed to build");
  return *built.spec;
}

ActionSpec example_reflection_action() {
  ReflectionParams params;
  params.n = 3;
  params.m = 2;
  params.d = 1;
  params.mu.assign(3, CycNum(1));
  params.gamma_seed = CycNum(1);
  params.axis_vertex_signs[1] = 1;
  const BuildOutcome built = build_reflection(params);
  if (!built.ok()) throw std::logic_error("sample reflection action failed to build");
  return *built.spec;
}

std::vector<CriterionResult> run_selftest(std::uint64_t seed, std::ostream* progress) {
  std::mt19937_64 rng(seed);
  std::vector<CriterionResult> results;
  const auto run = [&](auto&& fn) {
    const auto start = Clock::now();
    CriterionResult r = fn();
    r.seconds = seconds_since(start);
    r.index = static_cast<int>(results.size()) + 1;
    results.push_back(r);
    if (progress) {
      (*progress) << (r.passed ? "[PASS] " : "[FAIL] ") << r.index << ". " << r.name
                  << " (" << r.seconds << "s)\n";
      if (!r.detail.empty()) (*progress) << "       " << r.detail << "\n";
      progress->flush();
    }
  };
  run([&] { return criterion_rewriting(rng); });
  run(criterion_sample_actions);
  run(criterion_rotation_exhaustion);
  run(criterion_reflection_forcing);
  run(criterion_exceptional_family);
  run(criterion_invariant_closed_forms);
  run(criterion_invariants_equal_center);
  run(criterion_orbit_count_dimensions);
  return results;
}

}  // namespace qtaft
