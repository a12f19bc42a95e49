#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xyrc/graph.hpp"
#include "xyrc/kernels.hpp"

namespace xyrc {

/// One angle per vertex, each in [0, 2π).
class AngleConfig {
 public:
  /// Throws std::invalid_argument if an angle lies outside [0, 2π).
  explicit AngleConfig(std::vector<double> angles);

  std::size_t size() const noexcept { return angles_.size(); }
  double operator[](std::size_t x) const { return angles_[x]; }
  const std::vector<double>& angles() const noexcept { return angles_; }

 private:
  std::vector<double> angles_;
};

/// H(θ) = −Σ_{xy∈E} J_xy cos(θ_x − θ_y).
double hamiltonian(const Graph& graph, const AngleConfig& theta);

enum class QuadratureMode {
  GaugeFixed,  // vertex 0 pinned to angle 0; requires Σφ = 0
  Full,        // all |V| angles integrated
};

struct OracleOptions {
  kernels::KernelChoice kernel = kernels::KernelChoice::Auto;
  unsigned threads = 1;
};

struct QuadratureResult {
  double estimate = 0;
  std::uint64_t grid = 0;
  std::uint64_t points = 0;
  std::string kernel;
};

/// ⟨cos(φ·θ)⟩ as a ratio of K-point periodic trapezoid sums of cos(φ·θ)·e^{−H}
/// and e^{−H}. Deterministic for a given kernel set regardless of threads.
/// GaugeFixed with Σφ ≠ 0 throws PreconditionError.
QuadratureResult quadrature_correlation(const Graph& graph, const SourceFunction& phi, std::uint64_t grid,
                                        QuadratureMode mode = QuadratureMode::GaugeFixed,
                                        const OracleOptions& options = {});

struct MonteCarloResult {
  double estimate = 0;
  double stderr_estimate = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string kernel;
};

/// Self-normalized importance sampling with uniform proposals on [0, 2π)^V:
/// estimate = Σ w cos(φ·θ) / Σ w with w = e^{−H}; the standard error is the
/// delta-method one, sqrt(Σ w²(o − estimate)²) / Σ w.
///
/// Samples are drawn in blocks of kMonteCarloBlock. Block b uses
/// std::mt19937_64 seeded with splitmix64(seed ^ splitmix64(b)); each uniform
/// angle is 2π·(x >> 11)·2^{−53}, vertices in index order per sample. Output
/// is bit-identical for equal (graph, φ, samples, seed, kernel set) and does
/// not depend on the thread count.
MonteCarloResult mc_correlation(const Graph& graph, const SourceFunction& phi, std::uint64_t samples,
                                std::uint64_t seed, const OracleOptions& options = {});

inline constexpr std::size_t kMonteCarloBlock = 4096;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace xyrc
