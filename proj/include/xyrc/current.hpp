#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "xyrc/graph.hpp"
#include "xyrc/rational.hpp"

namespace xyrc {

/// Nonnegative integer per unoriented edge. Indexes the multigraph 𝔾_N.
class EdgeAmplitude {
 public:
  EdgeAmplitude() = default;
  explicit EdgeAmplitude(std::size_t num_edges) : values_(num_edges, 0) {}
  EdgeAmplitude(std::initializer_list<std::uint64_t> values) : values_(values) {}
  explicit EdgeAmplitude(std::vector<std::uint64_t> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  std::uint64_t operator[](EdgeIndex e) const { return values_[e]; }
  std::uint64_t& operator[](EdgeIndex e) { return values_[e]; }
  std::span<const std::uint64_t> values() const noexcept { return values_; }
  std::uint64_t total() const noexcept;

  friend bool operator==(const EdgeAmplitude&, const EdgeAmplitude&) = default;
  friend auto operator<=>(const EdgeAmplitude&, const EdgeAmplitude&) = default;

 private:
  std::vector<std::uint64_t> values_;
};

/// Nonnegative integer per oriented edge, indexed like oriented_edges(graph):
/// slot 2e is the canonical direction of edge e, 2e + 1 the reverse.
class Current {
 public:
  Current() = default;
  explicit Current(const Graph& graph) : values_(2 * graph.num_edges(), 0) {}
  explicit Current(std::vector<std::uint64_t> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  std::size_t num_edges() const noexcept { return values_.size() / 2; }
  std::uint64_t operator[](std::size_t oriented) const { return values_[oriented]; }
  std::uint64_t& operator[](std::size_t oriented) { return values_[oriented]; }

  std::uint64_t forward(EdgeIndex e) const { return values_[2 * e]; }
  std::uint64_t backward(EdgeIndex e) const { return values_[2 * e + 1]; }
  std::uint64_t& forward(EdgeIndex e) { return values_[2 * e]; }
  std::uint64_t& backward(EdgeIndex e) { return values_[2 * e + 1]; }

  /// Value on the oriented edge u->v; throws if {u, v} is not an edge.
  std::uint64_t at(const Graph& graph, VertexId u, VertexId v) const;
  void set(const Graph& graph, VertexId u, VertexId v, std::uint64_t value);

  /// Swaps the two directions on every edge.
  Current reversed() const;

  std::span<const std::uint64_t> values() const noexcept { return values_; }
  friend bool operator==(const Current&, const Current&) = default;
  friend auto operator<=>(const Current&, const Current&) = default;

 private:
  std::vector<std::uint64_t> values_;
};

EdgeAmplitude amplitude(const Current& n);

/// ∂n_x = Σ_{y∼x} (n_{x→y} − n_{y→x}).
SourceFunction source(const Current& n, const Graph& graph);

/// w_J(n) = Π_{oriented e} (J_e/2)^{n_e} / n_e!.
Rational weight(const Current& n, const Graph& graph);

/// Σ_e |n|_e ≤ cap.
struct DegreeCap {
  std::uint64_t value;
};

using CurrentConstraint = std::variant<EdgeAmplitude, DegreeCap>;

using CurrentVisitor = std::function<void(const Current&)>;

/// Visits currents in lexicographic order of (n_0, n_1, ..., n_{2|E|-1}).
/// Fixed-amplitude mode runs n_{2e} over 0..N_e with n_{2e+1} = N_e − n_{2e};
/// cap mode visits every current with total amplitude ≤ cap. With a filter only
/// currents whose source equals it are visited; partial sources are pruned as
/// soon as a vertex's incident edges are all assigned.
void for_each_current(const Graph& graph, const CurrentConstraint& constraint,
                      const std::optional<SourceFunction>& source_filter, const CurrentVisitor& visit);

std::vector<Current> enumerate_currents(const Graph& graph, const CurrentConstraint& constraint,
                                        const std::optional<SourceFunction>& source_filter = std::nullopt);

/// All amplitude vectors N with Σ_e N_e ≤ sum_cap, lexicographic ascending.
std::vector<EdgeAmplitude> amplitude_vectors(std::size_t num_edges, std::uint64_t sum_cap);

}  // namespace xyrc
