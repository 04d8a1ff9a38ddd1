#include "qtaft/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <random>

#include "qtaft/errors.hpp"

using namespace qtaft;

namespace {

CycNum zeta(long order, long exponent) { return CycNum::root_of_unity(order, exponent); }

CycNum random_cyc(std::mt19937_64& rng, long order) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<Rational> coeffs(totient(order));
  for (auto& c : coeffs) c = Rational(num(rng), den(rng));
  return CycNum::from_coefficients(order, std::move(coeffs));
}

}  // namespace

TEST(Cyclotomic, RootConstruction) {
  EXPECT_TRUE(zeta(1, 0).is_one());
  EXPECT_EQ(zeta(4, 2), CycNum(-1));
  EXPECT_TRUE((zeta(3, 0) + zeta(3, 1) + zeta(3, 2)).is_zero());
}

TEST(Cyclotomic, RootInversesArePowers) {
  EXPECT_EQ(zeta(3, 1).inverse(), zeta(3, 2));
  EXPECT_TRUE(zeta(6, 1).pow(6).is_one());
}

TEST(Cyclotomic, InverseAgainstProductOracle) {
  const CycNum a = CycNum(1) + zeta(5, 1);
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_THROW(CycNum(0, 5).inverse(), division_by_zero);
}

TEST(Cyclotomic, PrimitiveRootQueries) {
  EXPECT_TRUE(is_primitive_root(zeta(3, 1), 3));
  EXPECT_TRUE(is_primitive_root(CycNum(-1), 2));
  // brute force over powers s = 1, 2, 3
  const CycNum a = zeta(6, 2);
  for (long s = 1; s < 3; ++s) EXPECT_FALSE(a.pow(s).is_one());
  EXPECT_TRUE(a.pow(3).is_one());
  EXPECT_TRUE(is_primitive_root(a, 3));
  EXPECT_FALSE(is_primitive_root(zeta(6, 2), 6));
}

TEST(Cyclotomic, FieldAxiomsOnRandomSamples) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10000; ++trial) {
    const long order = (trial % 2 == 0) ? 12 : 6;
    const CycNum a = random_cyc(rng, order);
    const CycNum b = random_cyc(rng, order);
    const CycNum c = random_cyc(rng, order);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(Cyclotomic, CanonicalizationIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const CycNum a = random_cyc(rng, 12) * random_cyc(rng, 12);
    EXPECT_EQ(CycNum::from_coefficients(a.order(), a.coefficients()), a);
  }
}

TEST(Cyclotomic, EmbeddingCommutesWithArithmetic) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const CycNum a = random_cyc(rng, 3);
    const CycNum b = random_cyc(rng, 3);
    EXPECT_EQ((a * b).embedded(12), a.embedded(12) * b.embedded(12));
    EXPECT_EQ((a + b).embedded(12), a.embedded(12) + b.embedded(12));
  }
  // mixed-order arithmetic lands in the compositum
  const CycNum mixed = zeta(3, 1) * zeta(4, 1);
  EXPECT_EQ(mixed.order(), 12);
  EXPECT_EQ(mixed, zeta(12, 7));
}

TEST(Cyclotomic, SquareRoots) {
  EXPECT_EQ(*square_root(CycNum(Rational(4, 9))), CycNum(Rational(2, 3)));
  EXPECT_EQ(*square_root(CycNum(-1, 12)), zeta(12, 3));
  EXPECT_EQ(*square_root(zeta(12, 8)), zeta(12, 4));
  EXPECT_TRUE(square_root(CycNum(0, 4))->is_zero());
  EXPECT_EQ(square_root(CycNum(2, 12)), std::nullopt);
  // the returned root squares back
  const CycNum value = CycNum(Rational(9, 4), 12) * zeta(12, 10);
  const auto root = square_root(value);
  ASSERT_TRUE(root.has_value());
  EXPECT_EQ(*root * *root, value);
}

TEST(Cyclotomic, RootOfUnityRoundTrip) {
  const RootOfUnity r(12, 7);
  EXPECT_EQ(r.to_string(), "zeta(12)^7");
  const auto parsed = RootOfUnity::from_string("zeta(12)^7");
  ASSERT_TRUE(parsed.has_value());
  EXPECT_EQ(*parsed, r);
  const auto from_value = RootOfUnity::from_value(r.value(), 12);
  ASSERT_TRUE(from_value.has_value());
  EXPECT_EQ(*from_value, r);
  EXPECT_EQ(r.primitive_order(), 12);
  EXPECT_EQ(RootOfUnity(12, 8).primitive_order(), 3);
  EXPECT_EQ(RootOfUnity(12, 0).primitive_order(), 1);
  EXPECT_FALSE(RootOfUnity::from_string("zeta12^3").has_value());
}

TEST(Cyclotomic, CyclotomicPolynomials) {
  // Phi_12 = x^4 - x^2 + 1
  const auto& phi12 = cyclotomic_polynomial(12);
  const std::vector<mpz_class> expected = {1, 0, -1, 0, 1};
  EXPECT_EQ(phi12, expected);
  EXPECT_EQ(totient(12), 4);
  EXPECT_EQ(totient(1), 1);
  EXPECT_EQ(totient(9), 6);
}
