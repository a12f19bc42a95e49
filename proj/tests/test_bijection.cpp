#include <gtest/gtest.h>

#include <random>

#include "xyrc/bijection.hpp"

namespace xyrc {
namespace {

constexpr auto F = Direction::Fwd;
constexpr auto B = Direction::Bwd;
constexpr SlotState kRedFwd{Color::Red, F};
constexpr SlotState kBlueBwd{Color::Blue, B};

TEST(Split, AllRedReversesBluePart) {
  const ColoredConfig omega{{{Color::Red, F}, {Color::Red, B}, {Color::Red, F}}};
  const SplitPair p = split(omega);
  EXPECT_EQ(p.red_part, (OrientedConfig{{F, B, F}}));
  EXPECT_EQ(p.blue_part, (OrientedConfig{{B, F, B}}));
}

TEST(Split, AllBlueCopiesDirections) {
  const ColoredConfig omega{{{Color::Blue, B}, {Color::Blue, F}}};
  const SplitPair p = split(omega);
  EXPECT_EQ(p.red_part, (OrientedConfig{{B, F}}));
  EXPECT_EQ(p.blue_part, p.red_part);
}

TEST(Split, MixedExampleSourcesMapToSumAndDifference) {
  const Graph edge = instances::single_edge(Rational(1));
  const Multigraph m(edge, EdgeAmplitude({2}));
  const ColoredConfig omega{{kRedFwd, kBlueBwd}};
  const SplitPair p = split(omega);
  EXPECT_EQ(p.red_part, (OrientedConfig{{F, B}}));
  EXPECT_EQ(p.blue_part, (OrientedConfig{{B, B}}));
  const auto [f, g] = sources_of_config(m, omega);
  EXPECT_EQ(source_of_orientation(m, p.red_part), f + g);
  EXPECT_TRUE(source_of_orientation(m, p.red_part).is_zero());
  EXPECT_EQ(source_of_orientation(m, p.blue_part), g - f);
  EXPECT_EQ(source_of_orientation(m, p.blue_part), (SourceFunction{-2, 2}));
}

TEST(Merge, Examples) {
  const OrientedConfig xi{{F, B, B}};
  const ColoredConfig agree = merge({xi, xi});
  for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(agree.slots[s], (SlotState{Color::Blue, xi.slots[s]}));

  const ColoredConfig disagree = merge({xi, OrientedConfig{{B, F, F}}});
  for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(disagree.slots[s], (SlotState{Color::Red, xi.slots[s]}));

  EXPECT_EQ(merge({OrientedConfig{{F, B}}, OrientedConfig{{B, B}}}), (ColoredConfig{{kRedFwd, kBlueBwd}}));
  EXPECT_THROW(merge({OrientedConfig{{F}}, OrientedConfig{{F, F}}}), std::invalid_argument);
}

// Round trips hold on arbitrary inputs, not only source-constrained ones.
TEST(SplitMerge, RandomRoundTrips) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t slots = rng() % 40;
    ColoredConfig omega;
    SplitPair pair;
    for (std::size_t s = 0; s < slots; ++s) {
      omega.slots.push_back({rng() & 1 ? Color::Red : Color::Blue, rng() & 1 ? F : B});
      pair.red_part.slots.push_back(rng() & 1 ? F : B);
      pair.blue_part.slots.push_back(rng() & 1 ? F : B);
    }
    EXPECT_EQ(merge(split(omega)), omega);
    EXPECT_EQ(split(merge(pair)), pair);
    EXPECT_EQ(split(omega).red_part.slots.size(), slots);
  }
}

TEST(VerifyBijection, SingleEdgeUnitAmplitude) {
  const auto r = verify_bijection(instances::single_edge(Rational(1)), EdgeAmplitude({1}));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.configs_checked, 4U);
  EXPECT_EQ(r.pairs_checked, 4U);
}

TEST(VerifyBijection, TriangleUnitAmplitude) {
  const auto r = verify_bijection(instances::cycle(3, Rational(1, 2)), EdgeAmplitude({1, 1, 1}));
  EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front().detail);
  EXPECT_EQ(r.configs_checked, 64U);
  EXPECT_EQ(r.pairs_checked, 64U);
  EXPECT_GT(r.classes_checked, 0U);
}

TEST(VerifyBijection, EmptyAmplitudeIsVacuous) {
  const auto r = verify_bijection(instances::cycle(4, Rational(1)), EdgeAmplitude(4));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.configs_checked, 1U);
  EXPECT_EQ(r.pairs_checked, 1U);
  EXPECT_EQ(r.classes_checked, 1U);
}

TEST(VerifyBijection, SquareSweep) {
  const Graph square = instances::cycle(4, Rational(1, 2));
  for (const EdgeAmplitude& n : amplitude_vectors(4, 3)) {
    const auto r = verify_bijection(square, n);
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front().detail);
    EXPECT_EQ(r.checked(), 2 * (std::uint64_t{1} << (2 * n.total())));
  }
}

}  // namespace
}  // namespace xyrc
