#include "qtaft/quiver.hpp"

#include <gtest/gtest.h>

#include <random>

#include "qtaft/errors.hpp"

using namespace qtaft;

namespace {

PathWord word(int n, const std::string& text) { return *PathWord::from_string(n, text); }

FreeElement random_element(std::mt19937_64& rng, int n, int max_degree, int terms) {
  std::uniform_int_distribution<int> deg_dist(0, max_degree);
  std::uniform_int_distribution<long> coeff_dist(-3, 3);
  FreeElement out(n);
  for (int t = 0; t < terms; ++t) {
    const auto basis = graded_basis(n, deg_dist(rng));
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    out.add_term(basis[pick(rng)], CycNum(coeff_dist(rng)));
  }
  return out;
}

}  // namespace

TEST(Quiver, ComposeBasics) {
  const PathWord e0 = PathWord::trivial(3, 0);
  const PathWord a0 = word(3, "a0");
  EXPECT_EQ(*e0.composed_with(a0), a0);
  const auto a0a1 = word(3, "a0").composed_with(word(3, "a1"));
  ASSERT_TRUE(a0a1.has_value());
  EXPECT_EQ(a0a1->source(), 0);
  EXPECT_EQ(a0a1->target(), 2);
  EXPECT_EQ(a0.composed_with(a0), std::nullopt);
}

TEST(Quiver, ArrowEndpoints) {
  EXPECT_EQ(arrow_source(Arrow{2, false}, 3), 2);
  EXPECT_EQ(arrow_target(Arrow{2, false}, 3), 0);
  EXPECT_EQ(arrow_source(Arrow{2, true}, 3), 0);
  EXPECT_EQ(arrow_target(Arrow{2, true}, 3), 2);
}

TEST(Quiver, UnitActsAsIdentity) {
  std::mt19937_64 rng(3);
  const FreeElement unit = algebra_unit(3);
  for (int trial = 0; trial < 20; ++trial) {
    const FreeElement x = random_element(rng, 3, 3, 4);
    EXPECT_EQ(unit * x, x);
    EXPECT_EQ(x * unit, x);
  }
}

TEST(Quiver, ProductExpansion) {
  const FreeElement lhs = FreeElement::from_path(word(3, "a0")) +
                          FreeElement::from_path(word(3, "a1"));
  const FreeElement rhs = FreeElement::from_path(word(3, "a1")) +
                          FreeElement::from_path(word(3, "a2"));
  // of the four products only the composable two survive
  FreeElement expected(3);
  expected.add_term(word(3, "a0.a1"), CycNum(1));
  expected.add_term(word(3, "a1.a2"), CycNum(1));
  EXPECT_EQ(lhs * rhs, expected);

  const FreeElement cycle = FreeElement::from_path(word(3, "a0")) *
                            FreeElement::from_path(word(3, "a0*"));
  EXPECT_EQ(cycle, FreeElement::from_path(word(3, "a0.a0*")));
}

TEST(Quiver, GradedBasisCounts) {
  const auto degree0 = graded_basis(3, 0);
  ASSERT_EQ(degree0.size(), 3u);
  EXPECT_EQ(degree0[0], PathWord::trivial(3, 0));
  EXPECT_EQ(graded_basis(3, 1).size(), 6u);
  // each of the 6 arrows extends by exactly two composable arrows
  EXPECT_EQ(graded_basis(3, 2).size(), 12u);
  EXPECT_EQ(graded_basis(5, 3).size(), 40u);
}

TEST(Quiver, MultiplicationIsAssociative) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const FreeElement a = random_element(rng, 3, 4, 3);
    const FreeElement b = random_element(rng, 3, 4, 3);
    const FreeElement c = random_element(rng, 3, 4, 3);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Quiver, ProductsRespectTheGrading) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> deg_dist(0, 3);
    const int dp = deg_dist(rng), dq = deg_dist(rng);
    const auto basis_p = graded_basis(4, dp);
    const auto basis_q = graded_basis(4, dq);
    std::uniform_int_distribution<size_t> pick_p(0, basis_p.size() - 1);
    std::uniform_int_distribution<size_t> pick_q(0, basis_q.size() - 1);
    const FreeElement prod = FreeElement::from_path(basis_p[pick_p(rng)]) *
                             FreeElement::from_path(basis_q[pick_q(rng)]);
    EXPECT_EQ(prod.graded_component(dp + dq), prod);
  }
}

TEST(Quiver, SizeMismatchRejected) {
  EXPECT_THROW(FreeElement::from_path(word(3, "a0")) * FreeElement::from_path(word(4, "a0")),
               size_mismatch);
}

TEST(Quiver, SmallQuiversRejected) {
  EXPECT_THROW(PathWord::trivial(2, 0), std::invalid_argument);
  EXPECT_THROW(graded_basis(2, 1), std::invalid_argument);
}

TEST(Quiver, SerializationRoundTrip) {
  for (const std::string text : {"e2", "a0", "a1*", "a0.a1.a1*", "a2.a0.a0*.a2*"}) {
    const auto w = PathWord::from_string(3, text);
    ASSERT_TRUE(w.has_value()) << text;
    EXPECT_EQ(w->to_string(), text);
  }
  EXPECT_FALSE(PathWord::from_string(3, "a0.a2").has_value());  // not composable
  EXPECT_FALSE(PathWord::from_string(3, "b1").has_value());
}
