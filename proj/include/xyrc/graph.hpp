#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "xyrc/rational.hpp"

namespace xyrc {

using VertexId = std::uint32_t;
using EdgeIndex = std::size_t;

/// Unoriented edge stored canonically with tail < head.
struct Edge {
  VertexId tail;
  VertexId head;
  Rational coupling;
};

/// One direction of a base edge. Oriented edge `2e` runs tail->head of edge e
/// (the canonical "forward" direction), `2e + 1` runs head->tail.
struct OrientedEdge {
  VertexId tail;
  VertexId head;
  EdgeIndex base;

  bool forward() const noexcept;
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

class ValidationError : public std::invalid_argument {
 public:
  enum class Kind { SelfLoop, DuplicateEdge, NonpositiveCoupling, DanglingEndpoint, InvalidVertexList };

  ValidationError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A call whose arguments violate a mathematical precondition (e.g. a source
/// function that does not sum to zero where one is required).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer-valued function on vertices. Holds one entry per vertex; the zero
/// function of a graph is SourceFunction(graph.num_vertices()).
class SourceFunction {
 public:
  SourceFunction() = default;
  explicit SourceFunction(std::size_t num_vertices) : values_(num_vertices, 0) {}
  SourceFunction(std::initializer_list<std::int64_t> values) : values_(values) {}
  explicit SourceFunction(std::vector<std::int64_t> values) : values_(std::move(values)) {}

  /// δ_a − δ_b on a graph with `num_vertices` vertices.
  static SourceFunction dipole(std::size_t num_vertices, VertexId a, VertexId b);

  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t operator[](std::size_t x) const { return values_[x]; }
  std::int64_t& operator[](std::size_t x) { return values_[x]; }
  std::span<const std::int64_t> values() const noexcept { return values_; }

  std::int64_t total() const noexcept;
  bool is_zero() const noexcept;

  SourceFunction operator-() const;
  friend SourceFunction operator+(const SourceFunction& a, const SourceFunction& b);
  friend SourceFunction operator-(const SourceFunction& a, const SourceFunction& b);
  friend bool operator==(const SourceFunction&, const SourceFunction&) = default;
  friend auto operator<=>(const SourceFunction&, const SourceFunction&) = default;

 private:
  std::vector<std::int64_t> values_;
};

std::string to_string(const SourceFunction& f);

struct EdgeDescription {
  VertexId u;
  VertexId v;
  Rational coupling;
};

/// Unvalidated instance description, as read from a graph file.
struct GraphSpec {
  std::vector<VertexId> vertices;
  std::vector<EdgeDescription> edges;
};

class Graph {
 public:
  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  /// Edge indices incident to x, ascending.
  std::span<const EdgeIndex> incident(VertexId x) const { return incidence_.at(x); }
  std::size_t degree(VertexId x) const { return incidence_.at(x).size(); }

  /// Index of the edge {u, v}, or num_edges() when absent.
  EdgeIndex find_edge(VertexId u, VertexId v) const noexcept;

  Rational total_coupling() const;

  SourceFunction zero_source() const { return SourceFunction(num_vertices_); }

  friend Graph build_graph(const GraphSpec& spec);

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

/// Validates and canonicalizes. Edges keep their input order; each is stored
/// with tail < head.
Graph build_graph(const GraphSpec& spec);

/// 2·|E| oriented edges: for each base edge e, the forward (2e) then the
/// backward (2e + 1) direction.
std::vector<OrientedEdge> oriented_edges(const Graph& graph);

/// Convenience constructors for the standard desk-scale instances.
namespace instances {
Graph single_edge(const Rational& coupling);
Graph path(std::size_t num_vertices, const Rational& coupling);
Graph cycle(std::size_t num_vertices, const Rational& coupling);
}  // namespace instances

}  // namespace xyrc
