#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "brute_force.hpp"
#include "xyrc/oracle.hpp"
#include "xyrc/series.hpp"

namespace xyrc {
namespace {

using kernels::KernelChoice;

const Graph kEdge = instances::single_edge(Rational(1));
const Graph kTriangle = instances::cycle(3, Rational(1, 2));
const SourceFunction kDipole{1, -1};

TEST(Hamiltonian, Examples) {
  EXPECT_DOUBLE_EQ(hamiltonian(kTriangle, AngleConfig({0, 0, 0})), -1.5);
  EXPECT_NEAR(hamiltonian(kEdge, AngleConfig({0, std::numbers::pi})), 1.0, 1e-15);
  EXPECT_NEAR(hamiltonian(kEdge, AngleConfig({std::numbers::pi / 2, 0})), 0.0, 1e-15);
  EXPECT_THROW(AngleConfig({-0.1}), std::invalid_argument);
  EXPECT_THROW(AngleConfig({2 * std::numbers::pi}), std::invalid_argument);
  EXPECT_THROW(hamiltonian(kEdge, AngleConfig({0})), std::invalid_argument);
}

TEST(Hamiltonian, GlobalRotationInvariance) {
  const Graph square = instances::cycle(4, Rational(3, 4));
  const std::vector<double> theta{0.3, 1.7, 4.0, 5.9};
  for (double shift : {0.25, 1.0, 3.0}) {
    std::vector<double> rotated;
    for (double t : theta) rotated.push_back(std::fmod(t + shift, 2 * std::numbers::pi));
    EXPECT_NEAR(hamiltonian(square, AngleConfig(rotated)), hamiltonian(square, AngleConfig(theta)), 1e-13);
  }
}

TEST(Quadrature, ZeroSourceIsExactlyOne) {
  EXPECT_EQ(quadrature_correlation(kTriangle, SourceFunction(3), 16).estimate, 1.0);
  EXPECT_EQ(quadrature_correlation(kEdge, SourceFunction(2), 8, QuadratureMode::Full).estimate, 1.0);
}

TEST(Quadrature, SingleEdgeBesselRatio) {
  for (KernelChoice k : {KernelChoice::Scalar, KernelChoice::Auto}) {
    const auto r = quadrature_correlation(kEdge, kDipole, 64, QuadratureMode::GaugeFixed, {k, 1});
    EXPECT_NEAR(r.estimate, brute::kBesselRatioAtOne, 1e-13);
    EXPECT_EQ(r.points, 64U);
    const auto full = quadrature_correlation(kEdge, kDipole, 64, QuadratureMode::Full, {k, 1});
    EXPECT_NEAR(full.estimate, brute::kBesselRatioAtOne, 1e-13);
    EXPECT_EQ(full.points, 64U * 64U);
  }
  const double i2 = static_cast<double>(brute::bessel_i(2, 2.0L) / brute::bessel_i(0, 2.0L));
  EXPECT_NEAR(quadrature_correlation(instances::single_edge(Rational(2)), SourceFunction{2, -2}, 64).estimate, i2,
              1e-13);
}

TEST(Quadrature, TriangleAgreesWithSeriesAndFrozenValue) {
  const double series = to_double(correlation(kTriangle, SourceFunction::dipole(3, 0, 1), 16));
  const double q = quadrature_correlation(kTriangle, SourceFunction::dipole(3, 0, 1), 64).estimate;
  EXPECT_NEAR(q, series, 1e-6);
  EXPECT_NEAR(q, brute::kTriangleHalfCorrelation, 1e-12);
  EXPECT_NEAR(quadrature_correlation(kTriangle, SourceFunction::dipole(3, 0, 1), 32).estimate, q, 1e-8);
}

TEST(Quadrature, KernelsAndThreadsAgree) {
  const Graph square = instances::cycle(4, Rational(1, 2));
  const SourceFunction phi{1, 0, -1, 0};
  const auto scalar = quadrature_correlation(square, phi, 24, QuadratureMode::GaugeFixed, {KernelChoice::Scalar, 1});
  const auto one = quadrature_correlation(square, phi, 24);
  const auto four = quadrature_correlation(square, phi, 24, QuadratureMode::GaugeFixed, {KernelChoice::Auto, 4});
  EXPECT_EQ(one.estimate, four.estimate);
  EXPECT_NEAR(one.estimate, scalar.estimate, 1e-13);
}

TEST(Quadrature, Errors) {
  EXPECT_THROW(quadrature_correlation(kEdge, SourceFunction{1, 0}, 16), PreconditionError);
  EXPECT_NO_THROW(quadrature_correlation(kEdge, SourceFunction{1, 0}, 16, QuadratureMode::Full));
  EXPECT_NEAR(quadrature_correlation(kEdge, SourceFunction{1, 0}, 16, QuadratureMode::Full).estimate, 0.0, 1e-14);
  EXPECT_THROW(quadrature_correlation(kEdge, kDipole, 1), std::invalid_argument);
  EXPECT_THROW(quadrature_correlation(kEdge, SourceFunction{1, -1, 0}, 8), std::invalid_argument);
}

TEST(MonteCarlo, ZeroSourceIsExact) {
  const auto r = mc_correlation(kTriangle, SourceFunction(3), 5000, 1);
  EXPECT_DOUBLE_EQ(r.estimate, 1.0);
  EXPECT_NEAR(r.stderr_estimate, 0.0, 1e-12);
}

TEST(MonteCarlo, SingleEdgeWithinThreeSigma) {
  const auto r = mc_correlation(kEdge, kDipole, 200000, 42);
  EXPECT_GT(r.stderr_estimate, 0.0);
  EXPECT_LT(r.stderr_estimate, 0.01);
  EXPECT_LE(std::abs(r.estimate - brute::kBesselRatioAtOne), 3 * r.stderr_estimate);
}

TEST(MonteCarlo, WeakCouplingDecorrelates) {
  const auto r = mc_correlation(instances::single_edge(Rational(1, 1000000)), kDipole, 100000, 3);
  EXPECT_LE(std::abs(r.estimate), 4 * r.stderr_estimate + 1e-6);
}

TEST(MonteCarlo, DeterministicAndThreadIndependent) {
  const SourceFunction phi = SourceFunction::dipole(3, 0, 2);
  const auto a = mc_correlation(kTriangle, phi, 50000, 7);
  const auto b = mc_correlation(kTriangle, phi, 50000, 7);
  const auto c = mc_correlation(kTriangle, phi, 50000, 7, {KernelChoice::Auto, 3});
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.stderr_estimate, b.stderr_estimate);
  EXPECT_EQ(a.estimate, c.estimate);
  EXPECT_EQ(a.stderr_estimate, c.stderr_estimate);
  EXPECT_NE(mc_correlation(kTriangle, phi, 50000, 8).estimate, a.estimate);
  const auto s = mc_correlation(kTriangle, phi, 50000, 7, {KernelChoice::Scalar, 1});
  EXPECT_NEAR(s.estimate, a.estimate, 1e-12);
}

TEST(MonteCarlo, Errors) {
  EXPECT_THROW(mc_correlation(kEdge, kDipole, 0, 1), std::invalid_argument);
  EXPECT_THROW(mc_correlation(kEdge, SourceFunction{1}, 10, 1), std::invalid_argument);
}

TEST(SplitMix, KnownValues) {
  // First outputs of the reference splitmix64 generator seeded with 0 and 1234567.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(splitmix64(1234567), 0x599ed017fb08fc85ULL);
}

}  // namespace
}  // namespace xyrc
