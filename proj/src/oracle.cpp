#include "xyrc/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "xyrc/parallel.hpp"

namespace xyrc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kQuadratureChunk = 1024;

struct EdgeTerm {
  VertexId u;
  VertexId v;
  double coupling;
};

/// Graph data converted to floating point once, at the oracle boundary.
struct FloatModel {
  std::vector<EdgeTerm> edges;
  std::vector<std::pair<VertexId, double>> phi;  // nonzero entries only
  double shift = 0;                               // Σ J, so exponents stay ≤ 0

  FloatModel(const Graph& graph, const SourceFunction& f) {
    for (const Edge& e : graph.edges()) {
      edges.push_back({e.tail, e.head, to_double(e.coupling)});
      shift += edges.back().coupling;
    }
    for (VertexId x = 0; x < f.size(); ++x)
      if (f[x] != 0) phi.emplace_back(x, static_cast<double>(f[x]));
  }
};

/// Buffers for one batch of angle configurations, stored per vertex.
struct Batch {
  std::vector<std::vector<double>> angles;
  std::vector<double> exponent;
  std::vector<double> observable;

  Batch(std::size_t vertices, std::size_t capacity)
      : angles(vertices, std::vector<double>(capacity, 0.0)), exponent(capacity), observable(capacity) {}
};

kernels::WeightedMoments evaluate(const FloatModel& model, Batch& batch, std::size_t n, const kernels::KernelSet& k) {
  std::fill_n(batch.exponent.begin(), n, -model.shift);
  for (const EdgeTerm& e : model.edges)
    k.add_scaled_cos_diff(e.coupling, batch.angles[e.u].data(), batch.angles[e.v].data(), batch.exponent.data(), n);
  std::fill_n(batch.observable.begin(), n, 0.0);
  for (const auto& [x, weight] : model.phi) k.add_scaled(weight, batch.angles[x].data(), batch.observable.data(), n);
  k.cos_inplace(batch.observable.data(), n);
  return k.weighted_moments(batch.exponent.data(), batch.observable.data(), n);
}

void check_source(const Graph& graph, const SourceFunction& phi) {
  if (phi.size() != graph.num_vertices()) throw std::invalid_argument("source function has wrong number of vertices");
}

}  // namespace

AngleConfig::AngleConfig(std::vector<double> angles) : angles_(std::move(angles)) {
  for (double a : angles_)
    if (!(a >= 0.0 && a < kTwoPi)) throw std::invalid_argument("angle outside [0, 2pi)");
}

double hamiltonian(const Graph& graph, const AngleConfig& theta) {
  if (theta.size() != graph.num_vertices()) throw std::invalid_argument("angle config has wrong number of vertices");
  double h = 0;
  for (const Edge& e : graph.edges()) h -= to_double(e.coupling) * std::cos(theta[e.tail] - theta[e.head]);
  return h;
}

QuadratureResult quadrature_correlation(const Graph& graph, const SourceFunction& phi, std::uint64_t grid,
                                        QuadratureMode mode, const OracleOptions& options) {
  check_source(graph, phi);
  if (grid < 2) throw std::invalid_argument("quadrature needs at least 2 points per angle");
  const bool gauge = mode == QuadratureMode::GaugeFixed && graph.num_vertices() > 0;
  if (mode == QuadratureMode::GaugeFixed && phi.total() != 0)
    throw PreconditionError("gauge-fixed quadrature requires sum(phi) = 0; use full-dimension mode");

  std::vector<VertexId> free_vertices;
  for (VertexId x = gauge ? 1 : 0; x < graph.num_vertices(); ++x) free_vertices.push_back(x);
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < free_vertices.size(); ++i) {
    if (points > (std::uint64_t{1} << 62) / grid) throw std::invalid_argument("quadrature grid too large");
    points *= grid;
  }

  const kernels::KernelSet& k = kernels::select_kernels(options.kernel);
  const FloatModel model(graph, phi);
  const std::size_t chunks = (points + kQuadratureChunk - 1) / kQuadratureChunk;
  std::vector<kernels::WeightedMoments> partial(chunks);
  const double step = kTwoPi / static_cast<double>(grid);

  parallel_for(chunks, options.threads, [&](std::size_t c) {
    const std::uint64_t begin = c * kQuadratureChunk;
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(kQuadratureChunk, points - begin));
    Batch batch(graph.num_vertices(), n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t index = begin + i;
      // Last free vertex varies fastest.
      for (std::size_t j = free_vertices.size(); j-- > 0;) {
        batch.angles[free_vertices[j]][i] = step * static_cast<double>(index % grid);
        index /= grid;
      }
    }
    partial[c] = evaluate(model, batch, n, k);
  });

  kernels::WeightedMoments total;
  for (const auto& p : partial) total += p;
  return {total.wo / total.w, grid, points, std::string(k.name)};
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

MonteCarloResult mc_correlation(const Graph& graph, const SourceFunction& phi, std::uint64_t samples,
                                std::uint64_t seed, const OracleOptions& options) {
  check_source(graph, phi);
  if (samples == 0) throw std::invalid_argument("Monte Carlo needs at least one sample");

  const kernels::KernelSet& k = kernels::select_kernels(options.kernel);
  const FloatModel model(graph, phi);
  const std::size_t blocks = (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
  std::vector<kernels::WeightedMoments> partial(blocks);

  parallel_for(blocks, options.threads, [&](std::size_t b) {
    const std::uint64_t begin = b * kMonteCarloBlock;
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(kMonteCarloBlock, samples - begin));
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(b)));
    Batch batch(graph.num_vertices(), n);
    for (std::size_t i = 0; i < n; ++i)
      for (VertexId x = 0; x < graph.num_vertices(); ++x)
        batch.angles[x][i] = kTwoPi * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    partial[b] = evaluate(model, batch, n, k);
  });

  kernels::WeightedMoments total;
  for (const auto& p : partial) total += p;
  MonteCarloResult r;
  r.estimate = total.wo / total.w;
  const double spread = total.w2o2 - 2.0 * r.estimate * total.w2o + r.estimate * r.estimate * total.w2;
  r.stderr_estimate = std::sqrt(std::max(0.0, spread)) / total.w;
  r.samples = samples;
  r.seed = seed;
  r.kernel = std::string(k.name);
  return r;
}

}  // namespace xyrc
