#include "qtaft/classify.hpp"

#include <gtest/gtest.h>

#include <random>

#include "qtaft/errors.hpp"
#include "qtaft/selftest.hpp"

using namespace qtaft;

namespace {

RotationParams basic_rotation_params() {
  RotationParams params;
  params.n = 3;
  params.r = 3;
  params.m = 3;
  params.d = 1;
  params.gamma0 = CycNum(1);
  params.xi = {CycNum::root_of_unity(12, 4).inverse()};
  params.mu.assign(3, CycNum(1));
  params.mu_star.assign(3, CycNum(1));
  return params;
}

ReflectionParams basic_reflection_params() {
  ReflectionParams params;
  params.n = 3;
  params.m = 2;
  params.d = 1;
  params.mu.assign(3, CycNum(1));
  params.gamma_seed = CycNum(1);
  params.axis_vertex_signs[1] = 1;
  return params;
}

}  // namespace

TEST(Classify, RotationFamilyBuilds) {
  const BuildOutcome outcome = build_rotation(basic_rotation_params());
  ASSERT_TRUE(outcome.ok()) << outcome.report.to_string();
  EXPECT_TRUE(outcome.report.all_passed());
  const ActionSpec& spec = *outcome.spec;
  EXPECT_EQ(spec.gamma[1], spec.lambda().inverse());
  EXPECT_TRUE(spec.sigma.empty_or_zero());
}

TEST(Classify, BadMuProductIsRejected) {
  RotationParams params = basic_rotation_params();
  params.mu[0] = CycNum::root_of_unity(3, 1);  // full product now zeta_3 != 1
  const BuildOutcome outcome = build_rotation(params);
  EXPECT_FALSE(outcome.ok());
  const CheckEntry* entry = outcome.report.find("necessary.mu_product_identity");
  ASSERT_NE(entry, nullptr);
  EXPECT_FALSE(entry->passed);
}

TEST(Classify, NonzeroSeedNeedsMuPairsEqualLambdaInverse) {
  RotationParams params;
  params.n = 5;
  params.r = 5;
  params.m = 5;
  params.d = 4;  // sigma(a_i) proportional to trivial paths
  params.gamma0 = CycNum(0);
  params.mu.assign(5, CycNum(1));
  params.mu_star.assign(5, CycNum(1));  // mu_i mu_i^* = 1 != lambda^{-1}
  params.c = CycNum(1);
  const BuildOutcome outcome = build_rotation(params);
  EXPECT_FALSE(outcome.ok());
  const CheckEntry* entry = outcome.report.find("necessary.sigma_descent_constraints");
  ASSERT_NE(entry, nullptr);
  EXPECT_FALSE(entry->passed);
}

TEST(Classify, ReflectionFamilyBuildsTheExpectedSigma) {
  const BuildOutcome outcome = build_reflection(basic_reflection_params());
  ASSERT_TRUE(outcome.ok()) << outcome.report.to_string();
  const ActionSpec& spec = *outcome.spec;

  const std::vector<CycNum> expected_gamma = {CycNum(1), CycNum(0), CycNum(-1)};
  for (int i = 0; i < 3; ++i) EXPECT_EQ(spec.gamma[i], expected_gamma[i]);

  const auto arrow_elt = [&](const std::string& text, long coeff) {
    return FreeElement::from_path(*PathWord::from_string(3, text), CycNum(coeff));
  };
  EXPECT_EQ(spec.sigma.of_arrow(Arrow{0, false}, 3), arrow_elt("a0", 1));
  EXPECT_EQ(spec.sigma.of_arrow(Arrow{1, false}, 3), arrow_elt("a0*", 1));
  EXPECT_EQ(spec.sigma.of_arrow(Arrow{0, true}, 3), arrow_elt("a1", -1));
  EXPECT_EQ(spec.sigma.of_arrow(Arrow{1, true}, 3), arrow_elt("a1*", -1));
  EXPECT_TRUE(spec.sigma.of_arrow(Arrow{2, false}, 3).is_zero());
  EXPECT_TRUE(spec.sigma.of_arrow(Arrow{2, true}, 3).is_zero());
}

TEST(Classify, AxisThroughVerticesForcesZeroGamma) {
  ReflectionParams params;
  params.n = 4;
  params.m = 2;
  params.d = 0;  // axes through vertices 0 and 2
  params.mu.assign(4, CycNum(1));
  params.gamma_seed = CycNum(1);
  const BuildOutcome outcome = build_reflection(params);
  ASSERT_TRUE(outcome.ok()) << outcome.report.to_string();
  EXPECT_TRUE(outcome.spec->gamma[0].is_zero());
  EXPECT_TRUE(outcome.spec->gamma[2].is_zero());
  EXPECT_EQ(outcome.spec->gamma[3], -outcome.spec->gamma[1]);
  EXPECT_EQ(reflection_fixed_vertices(4, 0), (std::vector<int>{0, 2}));
}

TEST(Classify, ReflectionGOrderConditionRejects) {
  ReflectionParams params = basic_reflection_params();
  params.mu[0] = CycNum::root_of_unity(4, 1);  // (mu_0 mu_1^{-1})^{m/2} != 1
  const BuildOutcome outcome = build_reflection(params);
  EXPECT_FALSE(outcome.ok());
  const CheckEntry* entry = outcome.report.find("necessary.reflection_g_order");
  ASSERT_NE(entry, nullptr);
  EXPECT_FALSE(entry->passed);
}

TEST(Classify, ExceptionalFamilySolvesTheSeedQuadratic) {
  ExceptionalParams params;
  params.m = 2;
  params.mu.assign(4, CycNum(1));
  params.gamma0 = CycNum(1);
  params.c = CycNum(1);
  params.c_star = CycNum(2);
  const BuildOutcome outcome = build_exceptional_half_turn(params);
  ASSERT_TRUE(outcome.ok()) << outcome.report.to_string();
  const ActionSpec& spec = *outcome.spec;
  // gamma_1^2 = mu_0 mu_2 - mu_3^{-1} c c^* = -1
  EXPECT_EQ(spec.gamma[1], CycNum::root_of_unity(spec.field_order, spec.field_order / 4));
  EXPECT_FALSE(spec.sigma.power_on_arrow(Arrow{0, false}, 4, 2).is_zero());
  EXPECT_TRUE(verify_hopf_relations(spec, 6).all_passed());
}

TEST(Classify, ExceptionalSigmaSquareZeroBranch) {
  ExceptionalParams params;
  params.m = 2;
  params.mu.assign(4, CycNum(1));
  params.gamma0 = CycNum(1);
  const BuildOutcome outcome = build_exceptional_half_turn(params);
  ASSERT_TRUE(outcome.ok()) << outcome.report.to_string();
  const ActionSpec& spec = *outcome.spec;
  EXPECT_EQ(spec.gamma[1].pow(2), spec.mu[0] * spec.mu[2] * spec.gamma[0].pow(2));
  for (int i = 0; i < 8; ++i) {
    EXPECT_TRUE(spec.sigma.power_on_arrow(Arrow{i % 4, i >= 4}, 4, 2).is_zero());
  }
  const CheckEntry* entry = outcome.report.find("necessary.exceptional_sigma_square");
  ASSERT_NE(entry, nullptr);
  EXPECT_TRUE(entry->passed);
}

TEST(Classify, ExceptionalUnbalancedMuRejected) {
  ExceptionalParams params;
  params.m = 2;
  params.mu = {CycNum(1), CycNum::root_of_unity(4, 1), CycNum(1), CycNum(1)};
  params.gamma0 = CycNum(1);
  params.c = CycNum(1);
  params.c_star = CycNum(2);
  const BuildOutcome outcome = build_exceptional_half_turn(params);
  EXPECT_FALSE(outcome.ok());
}

TEST(Classify, SquareRootOutsideTheFieldSignalsAnError) {
  ExceptionalParams params;
  params.m = 2;
  params.mu = {CycNum(-1), CycNum(1), CycNum(1), CycNum(1)};
  params.gamma0 = CycNum(1);
  params.c = CycNum(1);
  params.c_star = CycNum(1);
  // gamma_1^2 = -2, whose root needs a larger field than Q(zeta_4)
  EXPECT_THROW(build_exceptional_half_turn(params), square_root_not_in_field);
}

TEST(Classify, NecessaryChecksOnSamples) {
  EXPECT_TRUE(check_necessary(example_rotation_action()).all_passed());
  EXPECT_TRUE(check_necessary(example_reflection_action()).all_passed());
}

TEST(Classify, TamperedGammaLadderFails) {
  ActionSpec spec = example_rotation_action();
  spec.gamma[1] = spec.gamma[1] * CycNum(2);
  const ConstraintReport report = check_necessary(spec);
  const CheckEntry* entry = report.find("necessary.gamma_power_step");
  ASSERT_NE(entry, nullptr);
  EXPECT_FALSE(entry->passed);
}

TEST(Classify, BuildersRejectBadPreconditions) {
  RotationParams params = basic_rotation_params();
  params.d = 0;
  EXPECT_THROW(build_rotation(params), std::invalid_argument);
  params = basic_rotation_params();
  params.xi.clear();
  EXPECT_THROW(build_rotation(params), std::invalid_argument);

  ReflectionParams reflection = basic_reflection_params();
  reflection.m = 3;
  EXPECT_THROW(build_reflection(reflection), std::invalid_argument);
}

TEST(Classify, RecurrenceSigmaMatchesClosedForms) {
  // sigma tables grown from the coefficient recurrences agree with the
  // unrolled closed forms at every index, for random parameter draws.
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> exp_dist(0, 11);
  int draws = 0;
  while (draws < 24) {
    RotationParams params;
    params.n = 4 + static_cast<int>(rng() % 3);
    params.r = 2;
    params.m = 2;
    const std::vector<int> d_choices = {1, 2, params.n - 2, params.n - 1};
    params.d = d_choices[rng() % 4];
    params.gamma0 = CycNum(0);
    params.mu.clear();
    params.mu_star.clear();
    for (int i = 0; i < params.n; ++i) {
      params.mu.push_back(CycNum::root_of_unity(12, exp_dist(rng)));
      params.mu_star.push_back(CycNum::root_of_unity(12, exp_dist(rng)));
    }
    params.c = CycNum(1 + static_cast<long>(rng() % 3));
    params.c_star = CycNum(1 + static_cast<long>(rng() % 3));
    const BuildOutcome outcome = build_rotation(params);
    const CheckEntry* entry = outcome.report.find("necessary.sigma_closed_form");
    ASSERT_NE(entry, nullptr);
    EXPECT_TRUE(entry->passed) << "n = " << params.n << ", d = " << params.d;
    ++draws;
  }
}

TEST(Classify, BuiltSpecsPassFullVerification) {
  // soundness: family constructors only emit verified actions
  std::vector<ActionSpec> specs = {example_rotation_action(), example_reflection_action()};
  {
    RotationParams params;
    params.n = 4;
    params.r = 4;
    params.m = 4;
    params.d = 1;
    params.gamma0 = CycNum(1);
    params.xi = {CycNum::root_of_unity(16, 4).inverse()};
    params.mu.assign(4, CycNum(1));
    params.mu_star.assign(4, CycNum(1));
    params.field_order = 16;
    const BuildOutcome outcome = build_rotation(params);
    ASSERT_TRUE(outcome.ok()) << outcome.report.to_string();
    specs.push_back(*outcome.spec);
  }
  for (const ActionSpec& spec : specs) {
    EXPECT_TRUE(spec.validate_structure().all_passed());
    EXPECT_TRUE(verify_module_algebra(spec, 4).all_passed());
    EXPECT_TRUE(verify_hopf_relations(spec, 4).all_passed());
    EXPECT_TRUE(is_inner_faithful(spec));
  }
}

TEST(Classify, EnumerationFindsNoCounterexamples) {
  EnumerationGrid grid;
  grid.n = 3;
  grid.r = 3;
  grid.m = 3;
  grid.kind = ActionKind::rotation;
  grid.d_values = {1};
  grid.mu_grid_order = 3;
  grid.all_primitive_lambdas = false;
  grid.verify_degree = 3;
  const EnumerationOutcome outcome = enumerate_actions(grid);
  EXPECT_GT(outcome.valid.size(), 0u);
  EXPECT_TRUE(outcome.violations.entries.empty()) << outcome.violations.to_string();
  for (const ActionSpec& spec : outcome.valid) {
    CycNum prod(1);
    for (const auto& v : spec.mu) prod *= v;
    EXPECT_TRUE(prod.is_one());
  }
}

TEST(Classify, RotationWithoutShiftYieldsNothing) {
  EnumerationGrid grid;
  grid.n = 3;
  grid.r = 3;
  grid.m = 3;
  grid.kind = ActionKind::rotation;
  grid.d_values = {0};
  grid.mu_grid_order = 3;
  grid.all_primitive_lambdas = false;
  grid.verify_degree = 2;
  const EnumerationOutcome outcome = enumerate_actions(grid);
  EXPECT_TRUE(outcome.valid.empty());
}

TEST(Classify, EnumerationBudgetIsEnforced) {
  EnumerationGrid grid;
  grid.n = 3;
  grid.r = 2;
  grid.m = 2;
  grid.mu_grid_order = 4;
  grid.budget = 100;
  EXPECT_THROW(enumerate_actions(grid), budget_exceeded);
}
