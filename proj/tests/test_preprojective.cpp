#include "qtaft/preprojective.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace qtaft;

namespace {

PathWord word(int n, const std::string& text) { return *PathWord::from_string(n, text); }

// Independent oracle: explore every rewrite sequence and collect the
// terminal words reached.
void all_terminal_words(const PathWord& w, std::set<std::string>& out) {
  const auto positions = rewrite_positions(w);
  if (positions.empty()) {
    out.insert(w.to_string());
    return;
  }
  for (const size_t pos : positions) all_terminal_words(apply_rewrite(w, pos), out);
}

PathWord random_composable_word(std::mt19937_64& rng, int n, int length) {
  std::uniform_int_distribution<int> base_dist(0, n - 1);
  std::uniform_int_distribution<int> star_dist(0, 1);
  const int base = base_dist(rng);
  std::vector<Arrow> arrows;
  int at = base;
  for (int i = 0; i < length; ++i) {
    if (star_dist(rng) == 0) {
      arrows.push_back(Arrow{at, false});
      at = (at + 1) % n;
    } else {
      arrows.push_back(Arrow{(at + n - 1) % n, true});
      at = (at + n - 1) % n;
    }
  }
  return PathWord(n, base, std::move(arrows));
}

}  // namespace

TEST(Preprojective, NormalFormExamples) {
  EXPECT_EQ(normal_form(word(3, "a0*.a0")), (NormalPath{1, 1, 1}));
  EXPECT_EQ(normal_path_word(NormalPath{1, 1, 1}, 3), word(3, "a1.a1*"));
  EXPECT_EQ(normal_form(word(3, "a0.a1")), (NormalPath{0, 2, 0}));
  EXPECT_EQ(normal_form(word(3, "a1*.a1.a1*")), (NormalPath{2, 1, 2}));
  EXPECT_EQ(normal_path_word(NormalPath{2, 1, 2}, 3), word(3, "a2.a2*.a1*"));
}

TEST(Preprojective, AllStrategiesTerminateAtTheSameWord) {
  std::set<std::string> terminals;
  all_terminal_words(word(3, "a1*.a1.a1*"), terminals);
  EXPECT_EQ(terminals, std::set<std::string>{"a2.a2*.a1*"});

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const PathWord w = random_composable_word(rng, 4, 6);
    std::set<std::string> reached;
    all_terminal_words(w, reached);
    ASSERT_EQ(reached.size(), 1u) << w.to_string();
    EXPECT_EQ(*reached.begin(), normal_path_word(normal_form(w), 4).to_string());
  }
}

TEST(Preprojective, DefiningRelationsVanish) {
  for (const int n : {3, 4, 5}) {
    for (int i = 0; i < n; ++i) {
      EXPECT_TRUE(reduce(omega_relation(n, i)).is_zero());
    }
  }
}

TEST(Preprojective, ReduceFixedElement) {
  // a five-term degree-3 element; the oracle is exhaustive rewriting of
  // each word, frozen here as the expected normal forms.
  FreeElement x(3);
  x.add_term(word(3, "a0.a0*.a0"), CycNum(2));
  x.add_term(word(3, "a0*.a0.a0*"), CycNum(-1));
  x.add_term(word(3, "a1.a2.a0"), CycNum(1));
  x.add_term(word(3, "a2*.a1*.a0*"), CycNum(5));
  x.add_term(word(3, "a1*.a1.a1*"), CycNum(3));

  for (const auto& [w, coeff] : x.terms()) {
    std::set<std::string> reached;
    all_terminal_words(w, reached);
    ASSERT_EQ(reached.size(), 1u);
  }

  PiElement expected(3);
  expected.add_term(NormalPath{0, 2, 1}, CycNum(2));   // a0.a0*.a0 -> a0.a1.a1*
  expected.add_term(NormalPath{1, 1, 2}, CycNum(-1));  // a0*.a0.a0* -> a1.a1*.a0*
  expected.add_term(NormalPath{1, 3, 0}, CycNum(1));   // a1.a2.a0
  expected.add_term(NormalPath{0, 0, 3}, CycNum(5));   // a2*.a1*.a0*
  expected.add_term(NormalPath{2, 1, 2}, CycNum(3));   // a1*.a1.a1*
  EXPECT_EQ(reduce(x), expected);
}

TEST(Preprojective, ReduceIsAnAlgebraHomomorphism) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    FreeElement x(3), y(3);
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (int t = 0; t < 3; ++t) {
      x.add_term(random_composable_word(rng, 3, len(rng)), CycNum(coeff(rng)));
      y.add_term(random_composable_word(rng, 3, len(rng)), CycNum(coeff(rng)));
    }
    ASSERT_EQ(reduce(x * y), pi_mul(reduce(x), reduce(y)));
  }
}

TEST(Preprojective, ProductsOfBasisPaths) {
  const PiElement p10 = PiElement::from_path(3, NormalPath{0, 1, 0});
  const PiElement p01_at1 = PiElement::from_path(3, NormalPath{1, 0, 1});
  EXPECT_EQ(pi_mul(p10, p01_at1), PiElement::from_path(3, NormalPath{0, 1, 1}));

  const PiElement left = PiElement::from_path(3, NormalPath{0, 0, 1});
  const PiElement right = PiElement::from_path(3, NormalPath{2, 1, 0});
  EXPECT_EQ(pi_mul(left, right), PiElement::from_path(3, NormalPath{0, 1, 1}));

  const PiElement cycle = PiElement::from_path(3, NormalPath{0, 1, 1});
  EXPECT_EQ(pi_mul(cycle, cycle), PiElement::from_path(3, NormalPath{0, 2, 2}));

  // non-composable endpoints give zero
  EXPECT_TRUE(pi_mul(p10, p10).is_zero());
}

TEST(Preprojective, BasisCounts) {
  EXPECT_EQ(pi_basis(3, 0).size(), 3u);
  EXPECT_EQ(pi_basis(3, 2).size(), 9u);
  EXPECT_EQ(pi_basis(4, 3).size(), 16u);
  for (int n = 3; n <= 8; ++n) {
    for (int ell = 0; ell <= 10; ++ell) {
      ASSERT_EQ(pi_basis(n, ell).size(), static_cast<size_t>(n) * (ell + 1));
    }
  }
}

TEST(Preprojective, NormalPathEndpoints) {
  const NormalPath p{2, 1, 2};
  EXPECT_EQ(p.source(), 2);
  EXPECT_EQ(p.target(3), 1);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.to_string(), "p(2,1,2)");
  EXPECT_EQ(NormalPath::from_string("p(2,1,2)"), p);
}

TEST(Preprojective, CenterDimensionsAndExamples) {
  const auto center = center_basis(3, 4);
  ASSERT_EQ(center[0].size(), 1u);
  // degree 0: the unit, equal coefficients at every vertex
  PiElement unit(3);
  for (int i = 0; i < 3; ++i) unit.add_term(NormalPath{i, 0, 0}, CycNum(1));
  EXPECT_EQ(center[0][0], unit);

  EXPECT_EQ(center[1].size(), 0u);
  ASSERT_EQ(center[2].size(), 1u);
  PiElement loops(3);
  for (int i = 0; i < 3; ++i) loops.add_term(NormalPath{i, 1, 1}, CycNum(1));
  EXPECT_EQ(center[2][0], loops);
  EXPECT_EQ(center[3].size(), 2u);
  EXPECT_EQ(center[4].size(), 1u);

  // hand cross-check: the degree-2 element commutes with a_0
  const PiElement a0 = PiElement::from_path(3, NormalPath{0, 1, 0});
  EXPECT_EQ(pi_mul(loops, a0), pi_mul(a0, loops));
}

TEST(Preprojective, CenterElementsCommuteWithDegreeOne) {
  for (const int n : {3, 4}) {
    const auto center = center_basis(n, 4);
    std::vector<PiElement> degree_one;
    for (const auto& p : pi_basis(n, 1)) degree_one.push_back(PiElement::from_path(n, p));
    for (const auto& level : center) {
      for (const auto& z : level) {
        for (const auto& b : degree_one) {
          ASSERT_EQ(pi_mul(z, b), pi_mul(b, z));
        }
      }
    }
  }
}
