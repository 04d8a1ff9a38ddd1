#include "qtaft/invariants.hpp"

#include <gtest/gtest.h>

#include "qtaft/errors.hpp"
#include "qtaft/selftest.hpp"

using namespace qtaft;

namespace {

PiElement orbit_sum(int n, int u, int v) {
  PiElement out(n);
  for (int k = 0; k < n; ++k) out.add_term(NormalPath{k, u, v}, CycNum(1));
  return out;
}

}  // namespace

TEST(Invariants, CharacterOrbitsOfVertices) {
  const ActionSpec spec = example_rotation_action();
  EXPECT_EQ(phi(spec, 0, NormalPath{0, 0, 0}), orbit_sum(3, 0, 0));

  const CycNum lam = spec.lambda();
  PiElement weighted(3);
  for (int i = 0; i < 3; ++i) weighted.add_term(NormalPath{i, 0, 0}, lam.pow(-i));
  EXPECT_EQ(phi(spec, 1, NormalPath{0, 0, 0}), weighted);

  // g eigenvalue law
  PiElement g_image = act_g(spec, weighted);
  PiElement scaled = weighted;
  scaled *= lam;
  EXPECT_EQ(g_image, scaled);
}

TEST(Invariants, CharacterOrbitsOfLoops) {
  const ActionSpec spec = example_rotation_action();
  EXPECT_EQ(phi(spec, 0, NormalPath{0, 1, 1}), orbit_sum(3, 1, 1));
}

TEST(Invariants, GEigenvalueLawHoldsEverywhere) {
  const ActionSpec spec = example_rotation_action();
  const CycNum lam = spec.lambda();
  for (long alpha = 0; alpha < 3; ++alpha) {
    for (int degree = 0; degree <= 4; ++degree) {
      for (int u = 0; u <= degree; ++u) {
        const NormalPath p{0, u, degree - u};
        PiElement expected = phi(spec, alpha, p);
        expected *= lam.pow(alpha);
        ASSERT_EQ(act_g(spec, phi(spec, alpha, p)), expected);
      }
    }
  }
}

TEST(Invariants, WeightTableMatchesTheGammaLadder) {
  const ActionSpec spec = example_rotation_action();
  const WeightTable table = weight_table(spec);
  // gamma_{k+1} = lambda^{-1} gamma_k everywhere
  for (int k = 0; k < 3; ++k) EXPECT_EQ(table.w[k], 2);
  // moving d steps forward multiplies gamma by lambda^{-1}
  EXPECT_EQ(table.weight(NormalPath{0, 1, 0}), 2);
  // moving d steps backward multiplies gamma by lambda
  EXPECT_EQ(table.weight(NormalPath{0, 0, 1}), 1);
  EXPECT_EQ(table.weight(NormalPath{0, 1, 1}), 0);
  EXPECT_EQ(table.weight(NormalPath{1, 2, 0}), 1);
}

TEST(Invariants, ClosedFormCoefficients) {
  const ActionSpec spec = example_rotation_action();
  const CycNum lam = spec.lambda();
  // loops are killed in weight zero
  EXPECT_TRUE(x_on_phi_coefficient(spec, 0, NormalPath{0, 1, 1}).is_zero());
  // single arrows are not
  EXPECT_EQ(x_on_phi_coefficient(spec, 0, NormalPath{0, 1, 0}),
            lam.inverse() - CycNum(1));
  // the weight of p_0(2,0) is -2 = 1 mod 3, so alpha = 1 is the killed
  // character index (and alpha = 2 is not)
  EXPECT_TRUE(x_on_phi_coefficient(spec, 1, NormalPath{0, 2, 0}).is_zero());
  EXPECT_TRUE(act_x(spec, phi(spec, 1, NormalPath{0, 2, 0})).is_zero());
  EXPECT_FALSE(x_on_phi_coefficient(spec, 2, NormalPath{0, 2, 0}).is_zero());
  EXPECT_FALSE(act_x(spec, phi(spec, 2, NormalPath{0, 2, 0})).is_zero());
}

TEST(Invariants, ClosedFormMatchesDirectAction) {
  const ActionSpec spec = example_rotation_action();
  for (long alpha = 0; alpha < 3; ++alpha) {
    for (int k = 0; k < 3; ++k) {
      for (int degree = 0; degree <= 4; ++degree) {
        for (int u = 0; u <= degree; ++u) {
          const NormalPath p{k, u, degree - u};
          PiElement closed = phi(spec, alpha + 1, p);
          closed *= x_on_phi_coefficient(spec, alpha, p);
          ASSERT_EQ(act_x(spec, phi(spec, alpha, p)), closed)
              << "alpha = " << alpha << ", p = " << p.to_string();
        }
      }
    }
  }
}

TEST(Invariants, ClosedFormsRequireTheHypotheses) {
  EXPECT_THROW(x_on_phi_coefficient(example_reflection_action(), 0, NormalPath{0, 1, 0}),
               hypothesis_violation);
  EXPECT_THROW(phi(example_reflection_action(), 0, NormalPath{0, 0, 0}),
               hypothesis_violation);
  ActionSpec unequal = example_rotation_action();
  unequal.taft.m = 6;
  EXPECT_THROW(x_on_phi_coefficient(unequal, 0, NormalPath{0, 1, 0}),
               hypothesis_violation);
}

TEST(Invariants, ProductRule) {
  const ActionSpec spec = example_rotation_action();
  {
    const auto check = phi_product(spec, 0, 0, NormalPath{0, 1, 1}, NormalPath{0, 1, 1});
    EXPECT_TRUE(check.holds);
    EXPECT_TRUE(check.coefficient.is_one());
    EXPECT_EQ(check.rhs, phi(spec, 0, NormalPath{0, 2, 2}));
  }
  {
    const auto check = phi_product(spec, 0, 1, NormalPath{0, 1, 1}, NormalPath{0, 1, 1});
    EXPECT_TRUE(check.holds);
    EXPECT_TRUE(check.coefficient.is_one());
  }
  {
    const auto check = phi_product(spec, 0, 1, NormalPath{0, 2, 1}, NormalPath{0, 1, 2});
    EXPECT_TRUE(check.holds);
    EXPECT_EQ(check.coefficient, spec.lambda().inverse());
  }
  EXPECT_THROW(phi_product(spec, 0, 0, NormalPath{0, 1, 0}, NormalPath{0, 1, 1}),
               std::invalid_argument);
  EXPECT_THROW(phi_product(spec, 0, 0, NormalPath{0, 1, 1}, NormalPath{1, 1, 1}),
               std::invalid_argument);
}

TEST(Invariants, KernelDimensions) {
  const ActionSpec spec = example_rotation_action();
  const InvariantBasis basis = invariant_basis(spec, 3);
  EXPECT_EQ(basis.dimension(0), 1u);
  EXPECT_EQ(basis.dimension(1), 0u);
  ASSERT_EQ(basis.dimension(2), 1u);
  EXPECT_EQ(basis.dimension(3), 2u);
  // the degree-2 invariant is the loop orbit
  const CycMatrix loop_row = {pi_coordinates(phi(spec, 0, NormalPath{0, 1, 1}), 2)};
  EXPECT_TRUE(in_row_span(loop_row, pi_coordinates(basis.per_degree[2][0], 2)));
}

TEST(Invariants, KernelMatchesTheOrbitPrediction) {
  const ActionSpec spec = example_rotation_action();
  const InvariantBasis basis = invariant_basis(spec, 5);
  const ConstraintReport report = compare_invariants_predicted(spec, basis);
  EXPECT_TRUE(report.all_passed()) << report.to_string();
}

TEST(Invariants, InvariantsAreClosedUnderProducts) {
  const ActionSpec spec = example_rotation_action();
  const InvariantBasis basis = invariant_basis(spec, 6);
  for (int da = 2; da <= 3; ++da) {
    for (int db = 2; db + da <= 6; ++db) {
      for (const auto& a : basis.per_degree[da]) {
        for (const auto& b : basis.per_degree[db]) {
          const PiElement product = pi_mul(a, b);
          CycMatrix rows;
          for (const auto& inv : basis.per_degree[da + db])
            rows.push_back(pi_coordinates(inv, da + db));
          ASSERT_TRUE(in_row_span(rows, pi_coordinates(product, da + db)));
        }
      }
    }
  }
}

TEST(Invariants, CenterComparisonInTheClosedFormRegime) {
  const ActionSpec spec = example_rotation_action();
  const InvariantCenterReport report = compare_invariants_center(spec, 6);
  EXPECT_TRUE(report.closed_form_regime);
  EXPECT_TRUE(report.invariants_equal_center());
  EXPECT_TRUE(report.generators_checked);
  EXPECT_TRUE(report.generators_span);
  ASSERT_EQ(report.rows.size(), 7u);
  const std::vector<size_t> expected_dims = {1, 0, 1, 2, 1, 2, 3};
  for (int ell = 0; ell <= 6; ++ell) {
    EXPECT_EQ(report.rows[ell].dim_invariants, expected_dims[ell]);
    EXPECT_EQ(report.rows[ell].dim_center, expected_dims[ell]);
  }
}

TEST(Invariants, ComparisonOutsideTheRegimeIsInformational) {
  // two orbits: gcd(d, n) = 2, the table is still produced
  ExceptionalParams params;
  params.m = 2;
  params.mu.assign(4, CycNum(1));
  params.gamma0 = CycNum(1);
  const BuildOutcome outcome = build_exceptional_half_turn(params);
  ASSERT_TRUE(outcome.ok());
  const InvariantCenterReport report = compare_invariants_center(*outcome.spec, 2);
  EXPECT_FALSE(report.closed_form_regime);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0].dim_invariants, 2u);
  EXPECT_EQ(report.rows[0].dim_center, 1u);
}

TEST(Invariants, DegreeZeroDimensionIsTheOrbitCount) {
  const ActionSpec spec = example_rotation_action();
  EXPECT_EQ(invariant_basis(spec, 0).dimension(0), 1u);
}
