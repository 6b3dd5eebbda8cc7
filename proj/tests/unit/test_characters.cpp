#include <gtest/gtest.h>

#include "selberg/characters.hpp"
#include "selberg/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace selberg;
using selberg::testing::Rng;

namespace {

std::vector<int> doubled(const Weight& w) { return {w.doubled().begin(), w.doubled().end()}; }

}  // namespace

TEST(WeylDim, KnownDimensions) {
  const RootSystem b1 = build_root_system(Series::B, 1);
  EXPECT_EQ(weyl_dim(b1, Weight::parse("1")), 3);
  EXPECT_EQ(weyl_dim(b1, Weight::parse("1/2")), 2);
  const RootSystem b2 = build_root_system(Series::B, 2);
  EXPECT_EQ(weyl_dim(b2, Weight::parse("1,0")), 5);
  EXPECT_EQ(weyl_dim(b2, Weight::parse("1/2,1/2")), 4);
  EXPECT_EQ(weyl_dim(b2, Weight::parse("1,1")), 10);
  const RootSystem d3 = build_root_system(Series::D, 3);
  EXPECT_EQ(weyl_dim(d3, Weight::parse("1,0,0")), 6);
  EXPECT_EQ(weyl_dim(d3, Weight::parse("1/2,1/2,-1/2")), 4);
  EXPECT_EQ(weyl_dim(d3, Weight::parse("1,1,1")), 10);
  EXPECT_THROW(weyl_dim(b2, Weight::parse("0,1")), Error);
}

TEST(Freudenthal, SpinJOfSO3HasUnitMultiplicities) {
  const RootSystem b1 = build_root_system(Series::B, 1);
  for (int twice_j = 0; twice_j <= 8; ++twice_j) {
    const auto table = freudenthal_weights(b1, Weight::from_doubled({twice_j}));
    EXPECT_EQ(table->multiplicities.size(), static_cast<std::size_t>(twice_j + 1));
    for (const auto& [mu, m] : table->multiplicities) EXPECT_EQ(m, 1);
  }
}

TEST(Freudenthal, AdjointOfB2HasZeroWeightMultiplicityTwo) {
  const RootSystem b2 = build_root_system(Series::B, 2);
  const auto table = freudenthal_weights(b2, Weight::parse("1,1"));
  EXPECT_EQ(table->multiplicities.at(Weight::zero(2)), 2);
  EXPECT_EQ(table->total(), 10);
}

// Property: Freudenthal multiplicities reproduce the Weyl character formula
// (evaluated by the independent alternating-sum oracle) at generic angles,
// and their total is the Weyl dimension.
TEST(FreudenthalProperty, MatchesAlternatingSumCharacter) {
  Rng rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    const Series series = trial % 2 == 0 ? Series::B : Series::D;
    const int k = selberg::testing::uniform_int(rng, 1, 4);
    const RootSystem rs = build_root_system(series, k);
    const Weight hw = selberg::testing::random_dominant(rng, rs, k >= 4 ? 4 : 6, trial % 3 == 0);
    const auto table = freudenthal_weights(rs, hw);
    EXPECT_EQ(table->total(), weyl_dim(rs, hw));
    const auto theta = selberg::testing::random_angles(rng, static_cast<std::size_t>(k));
    const auto expected = selberg::testing::weyl_character_oracle(series, doubled(hw), theta);
    const auto got = char_eval(*table, theta);
    EXPECT_NEAR(std::abs(got - expected), 0.0, 1e-8 * std::max(1.0, std::abs(expected))) << rs.name() << " " << hw.to_string();
  }
}

TEST(Characters, LiftSignOnlyTouchesHalfIntegralTables) {
  const RootSystem d2 = build_root_system(Series::D, 2);
  const std::vector<double> theta = {0.3, 1.1};
  const auto spinor = freudenthal_weights(d2, Weight::parse("1/2,1/2"));
  EXPECT_NEAR(std::abs(char_eval(*spinor, theta, -1) + char_eval(*spinor, theta, 1)), 0.0, 1e-14);
  const auto vec = freudenthal_weights(d2, Weight::parse("1,0"));
  EXPECT_NEAR(std::abs(char_eval(*vec, theta, -1) - char_eval(*vec, theta, 1)), 0.0, 1e-14);
  EXPECT_THROW(char_eval(*vec, std::vector<double>{0.1}), Error);
}

TEST(Klimyk, SpinTimesSpinInB2) {
  // 4 x 4 = 1 + 5 + 10 for Spin(5)
  const RootSystem b2 = build_root_system(Series::B, 2);
  const VirtualRep got = tensor_decompose(b2, Weight::parse("1/2,1/2"), Weight::parse("1/2,1/2"));
  VirtualRep expected(b2);
  expected.add(Weight::parse("0,0"), 1);
  expected.add(Weight::parse("1,0"), 1);
  expected.add(Weight::parse("1,1"), 1);
  EXPECT_EQ(got, expected);
}

// Property: the tensor decomposition has the product character, checked
// against the alternating-sum oracle, and the product dimension.
TEST(KlimykProperty, ProductCharacterAndDimension) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Series series = trial % 2 == 0 ? Series::B : Series::D;
    const int k = selberg::testing::uniform_int(rng, 1, 3);
    const RootSystem rs = build_root_system(series, k);
    const Weight a = selberg::testing::random_dominant(rng, rs, 4, trial % 4 == 1);
    const Weight b = selberg::testing::random_dominant(rng, rs, 4, trial % 3 == 2);
    const VirtualRep prod = tensor_decompose(rs, a, b);
    EXPECT_EQ(prod.dimension(), weyl_dim(rs, a) * weyl_dim(rs, b));
    for (const auto& [hw, c] : prod.terms()) EXPECT_GT(c, 0);
    const auto theta = selberg::testing::random_angles(rng, static_cast<std::size_t>(k));
    const auto expected = selberg::testing::weyl_character_oracle(series, doubled(a), theta) *
                          selberg::testing::weyl_character_oracle(series, doubled(b), theta);
    EXPECT_NEAR(std::abs(char_eval(prod, theta) - expected), 0.0, 1e-7 * std::max(1.0, std::abs(expected)));
  }
}

TEST(VirtualRep, ArithmeticDropsZeroCoefficients) {
  const RootSystem b2 = build_root_system(Series::B, 2);
  VirtualRep a = VirtualRep::irreducible(b2, Weight::parse("1,0"), 2);
  a -= VirtualRep::irreducible(b2, Weight::parse("1,0"), 2);
  EXPECT_TRUE(a.empty());
  EXPECT_THROW(a.add(Weight::parse("0,1"), 1), Error);
  const VirtualRep v = VirtualRep::irreducible(b2, Weight::parse("1,0")) - VirtualRep::irreducible(b2, Weight::zero(2));
  EXPECT_EQ(v.dimension(), 4);
  EXPECT_EQ(v.absolute_dimension(), 6);
  EXPECT_THROW(v + VirtualRep(build_root_system(Series::D, 2)), Error);
}

TEST(FormalCharacter, ConvolutionMatchesTensorProduct) {
  const RootSystem d2 = build_root_system(Series::D, 2);
  const VirtualRep a = VirtualRep::irreducible(d2, Weight::parse("1,0"));
  const VirtualRep b = VirtualRep::irreducible(d2, Weight::parse("1/2,-1/2"));
  EXPECT_EQ(convolve(formal_character(a), formal_character(b)), formal_character(a * b));
}
