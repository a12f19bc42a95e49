#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "brute_force.hpp"
#include "xyrc/series.hpp"

namespace xyrc {
namespace {

const Graph kEdge = instances::single_edge(Rational(1));
const Graph kTriangle = instances::cycle(3, Rational(1, 2));
const SourceFunction kDipole{1, -1};

TEST(PartitionFunction, Examples) {
  EXPECT_EQ(partition_function(kTriangle, 0), Rational(1));
  EXPECT_EQ(partition_function(kEdge, 0), Rational(1));
  EXPECT_EQ(partition_function(kEdge, 4), Rational(81, 64));
  EXPECT_NEAR(to_double(partition_function(kEdge, 30)), brute::kBesselI0AtOne, 1e-15);
}

TEST(PartitionFunction, MatchesNestedLoopOracle) {
  for (int cap = 0; cap <= 12; ++cap)
    EXPECT_NEAR(to_double(partition_function(instances::single_edge(Rational(3, 2)), cap)),
                static_cast<double>(brute::single_edge_source_sum(1.5L, 0, cap)), 1e-14);
}

TEST(PartitionFunction, MonotoneAndBounded) {
  const Graph square = instances::cycle(4, Rational(1, 2));
  Rational previous = 0;
  for (std::uint64_t cap = 0; cap <= 8; ++cap) {
    const Rational z = partition_function(square, cap);
    EXPECT_GE(z, previous);
    EXPECT_LT(to_double(z), std::exp(to_double(square.total_coupling())));
    previous = z;
  }
}

TEST(Correlation, Examples) {
  for (std::uint64_t cap : {0, 1, 5}) EXPECT_EQ(correlation(kTriangle, SourceFunction(3), cap), Rational(1));
  EXPECT_EQ(correlation(kEdge, kDipole, 3), Rational(9, 20));
  EXPECT_NEAR(to_double(correlation(kEdge, kDipole, 30)), brute::kBesselRatioAtOne, 1e-12);
  EXPECT_EQ(correlation(kEdge, SourceFunction{1, 0}, 6), Rational(0));
}

TEST(Correlation, ReversalSymmetry) {
  const Graph square = instances::cycle(4, Rational(1, 3));
  for (const SourceFunction& phi : {SourceFunction{1, -1, 0, 0}, SourceFunction{1, 0, -1, 0}, SourceFunction{2, -1, 0, -1}})
    EXPECT_EQ(correlation(square, phi, 6), correlation(square, -phi, 6));
}

TEST(Correlation, StabilizesInsideUnitInterval) {
  const auto r = correlation_series(kTriangle, SourceFunction::dipole(3, 0, 1), 12);
  ASSERT_TRUE(r.relative_change.has_value());
  EXPECT_LT(*r.relative_change, 1e-6);
  EXPECT_GE(r.value, -1);
  EXPECT_LE(r.value, 1);
  EXPECT_NEAR(to_double(r.value), brute::kTriangleHalfCorrelation, 1e-7);
}

TEST(GapCounts, Examples) {
  EXPECT_EQ(ginibre_gap_counts(kEdge, EdgeAmplitude({1}), kDipole, SourceFunction{0, 0}), 0);
  EXPECT_EQ(ginibre_gap_counts(kEdge, EdgeAmplitude({2}), kDipole, kDipole), 1);
  EXPECT_EQ(ginibre_gap_square(kEdge, EdgeAmplitude({2}), kDipole, kDipole), 1);
  EXPECT_EQ(ginibre_gap_counts(kTriangle, EdgeAmplitude({1, 1, 1}), SourceFunction::dipole(3, 0, 1),
                               SourceFunction::dipole(3, 1, 2)),
            0);
}

TEST(GapCounts, ExampleComponentsAgainstBruteForce) {
  // 1-edge N=2, φ=ψ=δ0−δ1: LHS 1 + 4, RHS 2·2.
  const brute::Edges e{{0, 1}};
  EXPECT_EQ(brute::two_color(2, e, {2}, {2, -2}, {0, 0}), 1);
  EXPECT_EQ(brute::two_color(2, e, {2}, {0, 0}, {0, 0}), 4);
  EXPECT_EQ(brute::two_color(2, e, {2}, {1, -1}, {1, -1}), 2);
}

TEST(GapCounts, PreconditionErrors) {
  EXPECT_THROW(ginibre_gap_counts(kEdge, EdgeAmplitude({1}), SourceFunction{1, 0}, SourceFunction{0, 0}),
               PreconditionError);
  EXPECT_THROW(ginibre_gap_series(kEdge, SourceFunction{0, 0}, SourceFunction{0, 1}, 2), PreconditionError);
}

TEST(GapCounts, PerfectSquareOnRandomSources) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-2, 2);
  const Graph square = instances::cycle(4, Rational(1, 2));
  for (int trial = 0; trial < 40; ++trial) {
    SourceFunction phi(4), psi(4);
    for (VertexId x = 0; x < 3; ++x) {
      phi[x] = entry(rng);
      psi[x] = entry(rng);
    }
    phi[3] = -(phi[0] + phi[1] + phi[2]);
    psi[3] = -(psi[0] + psi[1] + psi[2]);
    for (const EdgeAmplitude& n : amplitude_vectors(4, 3)) {
      const BigInt gap = ginibre_gap_counts(square, n, phi, psi);
      EXPECT_EQ(gap, ginibre_gap_square(square, n, phi, psi));
      EXPECT_GE(gap, 0);
    }
  }
}

TEST(GapSeries, Examples) {
  const SourceFunction zero{0, 0};
  for (std::uint64_t cap : {0, 3, 6}) {
    EXPECT_EQ(ginibre_gap_series(kEdge, kDipole, zero, cap), Rational(0));
    EXPECT_EQ(ginibre_gap_series(kEdge, zero, zero, cap), Rational(0));
  }
  // N=(0) contributes 1 (the empty configuration) and N=(2) contributes 1/8.
  EXPECT_EQ(ginibre_gap_counts(kEdge, EdgeAmplitude({0}), kDipole, kDipole), 1);
  EXPECT_EQ(ginibre_gap_counts(kEdge, EdgeAmplitude({1}), kDipole, kDipole), 0);
  EXPECT_EQ(ginibre_gap_series(kEdge, kDipole, kDipole, 2), Rational(9, 8));
  EXPECT_EQ(ginibre_gap_series(kEdge, kDipole, kDipole, 2) - ginibre_gap_series(kEdge, kDipole, kDipole, 1),
            Rational(1, 8));
}

// The gap series is the degree-graded expansion of Z²(⟨σ^{φ+ψ}⟩ + ⟨σ^{φ−ψ}⟩ −
// 2⟨σ^φ⟩⟨σ^ψ⟩); check it against products of single-current sums regraded by
// total degree.
TEST(GapSeries, MatchesRegradedCurrentProducts) {
  const SourceFunction phi = SourceFunction::dipole(3, 0, 1);
  const SourceFunction psi = SourceFunction::dipole(3, 1, 2);
  const std::uint64_t cap = 5;
  auto by_degree = [&](const SourceFunction& f) {
    std::vector<Rational> out(cap + 1, Rational(0));
    for_each_current(kTriangle, DegreeCap{cap}, f,
                     [&](const Current& n) { out[amplitude(n).total()] += weight(n, kTriangle); });
    return out;
  };
  auto pair_sum = [&](const SourceFunction& a, const SourceFunction& b) {
    const auto x = by_degree(a);
    const auto y = by_degree(b);
    Rational s = 0;
    for (std::uint64_t i = 0; i <= cap; ++i)
      for (std::uint64_t j = 0; i + j <= cap; ++j) s += x[i] * y[j];
    return s;
  };
  const SourceFunction zero(3);
  const Rational expected = pair_sum(phi + psi, zero) + pair_sum(phi - psi, zero) - 2 * pair_sum(phi, psi);
  EXPECT_EQ(ginibre_gap_series(kTriangle, phi, psi, cap), expected);
}

TEST(CoefficientIdentity, Examples) {
  const auto edge = coefficient_identity_check(kEdge, SourceFunction{0, 0}, SourceFunction{0, 0}, 4);
  EXPECT_TRUE(edge.passed());
  EXPECT_EQ(edge.rows.size(), 5U);

  const auto tri = coefficient_identity_check(kTriangle, SourceFunction::dipole(3, 0, 1), SourceFunction(3), 3);
  EXPECT_TRUE(tri.passed());
  EXPECT_EQ(tri.rows.size(), 20U);

  const auto trivial = coefficient_identity_check(kTriangle, SourceFunction(3), SourceFunction(3), 0);
  ASSERT_EQ(trivial.rows.size(), 1U);
  EXPECT_TRUE(trivial.rows[0].match);
  EXPECT_EQ(trivial.rows[0].count, 1);
  EXPECT_EQ(trivial.rows[0].current_pair_sum, Rational(1));
}

TEST(CoefficientIdentity, DetectsAWrongCount) {
  // Sanity: the check compares real quantities, so a different ψ changes the rows.
  const auto a = coefficient_identity_check(kEdge, kDipole, SourceFunction{0, 0}, 3, CountMethod::Multinomial);
  const auto b = coefficient_identity_check(kEdge, kDipole, kDipole, 3, CountMethod::Multinomial);
  EXPECT_TRUE(a.passed());
  EXPECT_TRUE(b.passed());
  EXPECT_NE(a.rows[1].count, b.rows[1].count);
}

TEST(TruncatedSeries, TermsRespectCap) {
  const TruncatedSeries s = source_series(kTriangle, SourceFunction(3), 4);
  EXPECT_EQ(s.degree_cap, 4U);
  for (const auto& [n, c] : s.terms) EXPECT_LE(n.total(), 4U);
  EXPECT_EQ(s.sum(), partition_function(kTriangle, 4));
  EXPECT_EQ(amplitude_coefficient(kEdge, EdgeAmplitude({2})), Rational(1, 8));
}

}  // namespace
}  // namespace xyrc
