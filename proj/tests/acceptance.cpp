// Acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero
// if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "xyrc/bijection.hpp"
#include "xyrc/oracle.hpp"
#include "xyrc/series.hpp"

using namespace xyrc;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct SweepCase {
  const char* name;
  Graph graph;
  std::uint64_t sum_cap;
};

std::vector<SweepCase> sweep_cases() {
  const Rational half(1, 2);
  return {{"edge", instances::single_edge(Rational(1)), 6},
          {"path3", instances::path(3, half), 4},
          {"triangle", instances::cycle(3, half), 4},
          {"cycle4", instances::cycle(4, half), 4}};
}

/// All φ with entries in [lo, hi] and Σφ = 0.
std::vector<SourceFunction> mean_zero_sources(std::size_t vertices, int lo, int hi) {
  std::vector<SourceFunction> out;
  SourceFunction f(vertices);
  std::function<void(std::size_t)> fill = [&](std::size_t x) {
    if (x + 1 == vertices || vertices == 0) {
      if (vertices == 0) {
        out.push_back(f);
        return;
      }
      const std::int64_t last = -(f.total() - f[x]);
      if (last >= lo && last <= hi) {
        f[x] = last;
        out.push_back(f);
        f[x] = 0;
      }
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      f[x] = v;
      fill(x + 1);
    }
    f[x] = 0;
  };
  fill(0);
  return out;
}

SourceFunction random_mean_zero(std::size_t vertices, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    SourceFunction f(vertices);
    for (VertexId x = 0; x + 1 < vertices; ++x) f[x] = d(rng);
    f[vertices - 1] = -(f.total());
    if (std::abs(f[vertices - 1]) <= 2) return f;
  }
}

Outcome bijection_exhaustion() {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t checked = 0, failures = 0;
  for (const auto& c : sweep_cases())
    for (const EdgeAmplitude& n : amplitude_vectors(c.graph.num_edges(), c.sum_cap)) {
      const BijectionReport r = verify_bijection(c.graph, n);
      checked += r.checked();
      failures += r.failure_count;
    }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {failures == 0 && seconds < 60.0, std::to_string(checked) + " objects checked, " + std::to_string(failures) +
                                               " failures, " + std::to_string(seconds) + " s"};
}

Outcome gap_equals_square() {
  std::uint64_t checked = 0, bad = 0;
  for (const auto& c : sweep_cases()) {
    const auto sources = mean_zero_sources(c.graph.num_vertices(), -2, 2);
    for (const EdgeAmplitude& n : amplitude_vectors(c.graph.num_edges(), c.sum_cap)) {
      const TwoColorTable two = two_color_table(c.graph, n);
      const OneColorTable one = one_color_table(c.graph, n);
      for (const auto& phi : sources)
        for (const auto& psi : sources) {
          const BigInt gap = ginibre_gap_counts(two, phi, psi);
          if (gap != ginibre_gap_square(one, phi, psi) || gap < 0) ++bad;
          ++checked;
        }
    }
  }
  return {bad == 0, std::to_string(checked) + " (N, phi, psi) triples, " + std::to_string(bad) + " mismatches"};
}

Outcome direct_equals_multinomial() {
  std::uint64_t tables = 0, bad = 0;
  for (const auto& c : sweep_cases())
    for (const EdgeAmplitude& n : amplitude_vectors(c.graph.num_edges(), c.sum_cap)) {
      if (two_color_table(c.graph, n, CountMethod::Direct) != two_color_table(c.graph, n, CountMethod::Multinomial))
        ++bad;
      ++tables;
    }
  return {bad == 0, std::to_string(tables) + " amplitude tables, " + std::to_string(bad) + " differ"};
}

Outcome coefficient_identity() {
  const Graph triangle = instances::cycle(3, Rational(1, 2));
  const SourceFunction phi = SourceFunction::dipole(3, 0, 1);
  std::uint64_t rows = 0, mismatches = 0;
  for (const SourceFunction& psi : {SourceFunction(3), SourceFunction::dipole(3, 1, 2)}) {
    const CoefficientReport r = coefficient_identity_check(triangle, phi, psi, 6);
    rows += r.rows.size();
    mismatches += r.mismatches;
  }
  return {mismatches == 0, std::to_string(rows) + " rows, " + std::to_string(mismatches) + " mismatches"};
}

Outcome single_edge_bessel() {
  const Graph edge = instances::single_edge(Rational(1));
  const SourceFunction phi{1, -1};
  const double series = to_double(correlation(edge, phi, 30));
  const double quad = quadrature_correlation(edge, phi, 64).estimate;
  const double ds = std::abs(series - brute::kBesselRatioAtOne);
  const double dq = std::abs(quad - brute::kBesselRatioAtOne);
  char buf[160];
  std::snprintf(buf, sizeof buf, "series err %.3g, quadrature err %.3g", ds, dq);
  return {ds <= 1e-9 && dq <= 1e-9, buf};
}

Outcome triangle_series_vs_quadrature() {
  const Graph triangle = instances::cycle(3, Rational(1, 2));
  const SourceFunction phi = SourceFunction::dipole(3, 0, 1);
  const double series = to_double(correlation(triangle, phi, 16));
  const double quad = quadrature_correlation(triangle, phi, 64).estimate;
  char buf[160];
  std::snprintf(buf, sizeof buf, "series %.15f, quadrature %.15f, |diff| %.3g", series, quad, std::abs(series - quad));
  return {std::abs(series - quad) <= 1e-6, buf};
}

Outcome gap_series_nonnegative() {
  std::mt19937_64 rng(20261019);
  int negative = 0, total = 0;
  Rational smallest = -1;
  for (const Graph& g : {instances::cycle(3, Rational(1, 2)), instances::cycle(4, Rational(1, 2))})
    for (int trial = 0; trial < 20; ++trial) {
      const SourceFunction phi = random_mean_zero(g.num_vertices(), rng);
      const SourceFunction psi = random_mean_zero(g.num_vertices(), rng);
      const Rational v = ginibre_gap_series(g, phi, psi, 6);
      if (v < 0) ++negative;
      if (smallest < 0 || v < smallest) smallest = v;
      ++total;
    }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d pairs, %d negative, min %.6g", total, negative, to_double(smallest));
  return {negative == 0, buf};
}

Outcome monte_carlo() {
  const Graph edge = instances::single_edge(Rational(1));
  const SourceFunction phi{1, -1};
  const auto a = mc_correlation(edge, phi, 1000000, 12345);
  const auto b = mc_correlation(edge, phi, 1000000, 12345);
  const double dev = std::abs(a.estimate - 0.446399);
  char buf[200];
  std::snprintf(buf, sizeof buf, "estimate %.6f +- %.2g (%.2f sigma), rerun %s, kernel %s", a.estimate,
                a.stderr_estimate, dev / a.stderr_estimate,
                a.estimate == b.estimate && a.stderr_estimate == b.stderr_estimate ? "identical" : "differs",
                a.kernel.c_str());
  return {dev <= 3 * a.stderr_estimate && a.estimate == b.estimate && a.stderr_estimate == b.stderr_estimate, buf};
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"bijection exhaustive on edge/path3/triangle/cycle4 under 60 s", bijection_exhaustion},
      {"count gap equals perfect square for all mean-zero phi, psi in [-2,2]", gap_equals_square},
      {"direct and multinomial two-color tables agree", direct_equals_multinomial},
      {"per-amplitude coefficient identity on triangle, D=6", coefficient_identity},
      {"single edge: series D=30 and quadrature K=64 within 1e-9 of I1(1)/I0(1)", single_edge_bessel},
      {"triangle J=1/2: series D=16 vs quadrature K=64 within 1e-6", triangle_series_vs_quadrature},
      {"gap series D=6 nonnegative on 20 random pairs per graph", gap_series_nonnegative},
      {"Monte Carlo 1e6 samples within 3 sigma, bit-identical rerun", monte_carlo},
  };
  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s [%d] %s: %s\n", o.passed ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
