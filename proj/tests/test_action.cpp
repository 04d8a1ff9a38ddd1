#include "qtaft/action.hpp"

#include <gtest/gtest.h>

#include "qtaft/linalg.hpp"
#include "qtaft/selftest.hpp"

using namespace qtaft;

namespace {

PathWord word(int n, const std::string& text) { return *PathWord::from_string(n, text); }

FreeElement path_elt(int n, const std::string& text, CycNum coeff = CycNum(1)) {
  return FreeElement::from_path(word(n, text), coeff);
}

}  // namespace

TEST(Action, RotationGOnVerticesAndWords) {
  const ActionSpec spec = example_rotation_action();
  EXPECT_EQ(act_g(spec, path_elt(3, "e0")), path_elt(3, "e1"));
  // automorphisms act multiplicatively on words
  EXPECT_EQ(act_g(spec, path_elt(3, "a0.a1")), path_elt(3, "a1.a2"));
}

TEST(Action, ReflectionGSwapsOrientation) {
  const ActionSpec spec = example_reflection_action();
  EXPECT_EQ(act_g(spec, path_elt(3, "a0")), path_elt(3, "a1*"));
  EXPECT_EQ(act_g(spec, path_elt(3, "e0")), path_elt(3, "e2"));
}

TEST(Action, XOnVerticesAndArrows) {
  const ActionSpec spec = example_rotation_action();
  const CycNum lam = spec.lambda();

  FreeElement expected_e0(3);
  expected_e0.add_term(word(3, "e0"), CycNum(1));
  expected_e0.add_term(word(3, "e1"), -lam.inverse());
  EXPECT_EQ(act_x(spec, path_elt(3, "e0")), expected_e0);

  // gamma_1 = lambda^2, gamma_0 = 1, sigma = 0
  FreeElement expected_a0(3);
  expected_a0.add_term(word(3, "a0"), lam.pow(2));
  expected_a0.add_term(word(3, "a1"), -lam.pow(2));
  EXPECT_EQ(act_x(spec, path_elt(3, "a0")), expected_a0);
}

TEST(Action, XKillsTheDefiningRelations) {
  const ActionSpec rotation = example_rotation_action();
  const ActionSpec reflection = example_reflection_action();
  for (int i = 0; i < 3; ++i) {
    EXPECT_TRUE(reduce(act_x(rotation, omega_relation(3, i))).is_zero());
    EXPECT_TRUE(reduce(act_x(reflection, omega_relation(3, i))).is_zero());
  }
}

TEST(Action, HopfRelationsHoldForTheSamples) {
  EXPECT_TRUE(verify_hopf_relations(example_rotation_action(), 4).all_passed());
  EXPECT_TRUE(verify_hopf_relations(example_reflection_action(), 3).all_passed());
}

TEST(Action, BrokenGammaFailsTheTwist) {
  ActionSpec spec = example_rotation_action();
  spec.gamma[0] = CycNum(5);  // breaks gamma_{g.i} = lambda^{-1} gamma_i
  const ConstraintReport report = verify_hopf_relations(spec, 2);
  const CheckEntry* twist = report.find("hopf.gx_twist");
  ASSERT_NE(twist, nullptr);
  EXPECT_FALSE(twist->passed);
  EXPECT_NE(twist->witness.find("p(0,0,0)"), std::string::npos);
  EXPECT_FALSE(spec.validate_structure().all_passed());
}

TEST(Action, ModuleAlgebraHoldsForTheSamples) {
  EXPECT_TRUE(verify_module_algebra(example_rotation_action(), 4).all_passed());
  EXPECT_TRUE(verify_module_algebra(example_reflection_action(), 4).all_passed());
}

TEST(Action, BrokenMuPairsBlockDescent) {
  ActionSpec spec = example_rotation_action();
  spec.mu[0] = CycNum::root_of_unity(12, 4);  // mu_0 mu_0^* != mu_1 mu_1^*
  EXPECT_FALSE(descent_mu_condition(spec));
  const ConstraintReport report = verify_module_algebra(spec, 2);
  const CheckEntry* descent = report.find("descend.g_kills_relations");
  ASSERT_NE(descent, nullptr);
  EXPECT_FALSE(descent->passed);
  EXPECT_NE(descent->witness.find("vertex 1"), std::string::npos);
}

TEST(Action, InnerFaithfulness) {
  EXPECT_TRUE(is_inner_faithful(example_rotation_action()));
  EXPECT_TRUE(is_inner_faithful(example_reflection_action()));

  ActionSpec trivial = example_rotation_action();
  for (auto& g : trivial.gamma) g = CycNum(0, trivial.field_order);
  trivial.sigma = SigmaTable{};
  EXPECT_FALSE(is_inner_faithful(trivial));

  // d = 0 forces gamma = 0 and sigma = 0
  ActionSpec fixed = trivial;
  fixed.d = 0;
  fixed.taft.m = 3;
  EXPECT_TRUE(fixed.validate_structure().all_passed());
  EXPECT_FALSE(is_inner_faithful(fixed));
}

TEST(Action, StructuralInvariantsOfTheSamples) {
  // sigma laws and the sigma^r compatibility equation hold verbatim
  for (const ActionSpec& spec :
       {example_rotation_action(), example_reflection_action()}) {
    const ConstraintReport report = spec.validate_structure();
    EXPECT_TRUE(report.all_passed()) << report.to_string();
  }
}

TEST(Action, GActsInvertiblyOnGradedComponents) {
  for (const ActionSpec& spec :
       {example_rotation_action(), example_reflection_action()}) {
    for (int ell = 0; ell <= 3; ++ell) {
      const auto basis = pi_basis(spec.n, ell);
      CycMatrix rows;
      for (const auto& p : basis)
        rows.push_back(pi_coordinates(act_g(spec, PiElement::from_path(spec.n, p)), ell));
      EXPECT_EQ(matrix_rank(rows), basis.size());
    }
  }
}

TEST(Action, SigmaApplyRejectsHighDegree) {
  const ActionSpec spec = example_reflection_action();
  EXPECT_THROW(spec.sigma.apply(path_elt(3, "a0.a1")), std::invalid_argument);
}

TEST(Action, ReportPlumbing) {
  ConstraintReport report;
  report.add("alpha", true);
  report.add("beta", false, "witness text");
  EXPECT_FALSE(report.all_passed());
  ASSERT_NE(report.find("beta"), nullptr);
  EXPECT_EQ(report.find("beta")->witness, "witness text");
  EXPECT_EQ(report.find("missing"), nullptr);
  ConstraintReport other;
  other.add("gamma", true);
  report.merge(other);
  EXPECT_EQ(report.entries.size(), 3u);
}
