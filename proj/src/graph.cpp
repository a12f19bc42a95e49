#include "xyrc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace xyrc {

bool OrientedEdge::forward() const noexcept { return tail < head; }

SourceFunction SourceFunction::dipole(std::size_t num_vertices, VertexId a, VertexId b) {
  SourceFunction f(num_vertices);
  f[a] += 1;
  f[b] -= 1;
  return f;
}

std::int64_t SourceFunction::total() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

bool SourceFunction::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](std::int64_t v) { return v == 0; });
}

SourceFunction SourceFunction::operator-() const {
  SourceFunction out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

SourceFunction operator+(const SourceFunction& a, const SourceFunction& b) {
  if (a.size() != b.size()) throw std::invalid_argument("source functions on different vertex sets");
  SourceFunction out = a;
  for (std::size_t x = 0; x < a.size(); ++x) out[x] += b[x];
  return out;
}

SourceFunction operator-(const SourceFunction& a, const SourceFunction& b) { return a + (-b); }

std::string to_string(const SourceFunction& f) {
  std::ostringstream os;
  os << '(';
  for (std::size_t x = 0; x < f.size(); ++x) os << (x ? "," : "") << f[x];
  os << ')';
  return os.str();
}

EdgeIndex Graph::find_edge(VertexId u, VertexId v) const noexcept {
  if (u >= num_vertices_ || v >= num_vertices_) return edges_.size();
  const VertexId lo = std::min(u, v);
  const VertexId hi = std::max(u, v);
  for (EdgeIndex e : incidence_[lo])
    if (edges_[e].head == hi) return e;
  return edges_.size();
}

Rational Graph::total_coupling() const {
  Rational sum = 0;
  for (const auto& e : edges_) sum += e.coupling;
  return sum;
}

Graph build_graph(const GraphSpec& spec) {
  using Kind = ValidationError::Kind;

  std::vector<VertexId> sorted = spec.vertices;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i)
      throw ValidationError(Kind::InvalidVertexList, "vertex ids must be exactly 0.." +
                                                         std::to_string(sorted.size()) + "-1 without repeats");
  }

  Graph g;
  g.num_vertices_ = sorted.size();
  g.incidence_.resize(g.num_vertices_);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& d : spec.edges) {
    const std::string label = std::to_string(d.u) + "-" + std::to_string(d.v);
    if (d.u == d.v) throw ValidationError(Kind::SelfLoop, "self-loop at vertex " + std::to_string(d.u));
    if (d.u >= g.num_vertices_ || d.v >= g.num_vertices_)
      throw ValidationError(Kind::DanglingEndpoint, "edge " + label + " has an undeclared endpoint");
    if (d.coupling <= 0)
      throw ValidationError(Kind::NonpositiveCoupling, "edge " + label + " has nonpositive coupling " +
                                                           format_rational(d.coupling));
    const VertexId lo = std::min(d.u, d.v);
    const VertexId hi = std::max(d.u, d.v);
    if (!seen.emplace(lo, hi).second) throw ValidationError(Kind::DuplicateEdge, "duplicate edge " + label);
    const EdgeIndex index = g.edges_.size();
    g.edges_.push_back(Edge{lo, hi, d.coupling});
    g.incidence_[lo].push_back(index);
    g.incidence_[hi].push_back(index);
  }
  return g;
}

std::vector<OrientedEdge> oriented_edges(const Graph& graph) {
  std::vector<OrientedEdge> out;
  out.reserve(2 * graph.num_edges());
  for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    out.push_back({edge.tail, edge.head, e});
    out.push_back({edge.head, edge.tail, e});
  }
  return out;
}

namespace instances {

Graph single_edge(const Rational& coupling) { return path(2, coupling); }

Graph path(std::size_t num_vertices, const Rational& coupling) {
  GraphSpec spec;
  for (std::size_t x = 0; x < num_vertices; ++x) spec.vertices.push_back(static_cast<VertexId>(x));
  for (std::size_t x = 0; x + 1 < num_vertices; ++x)
    spec.edges.push_back({static_cast<VertexId>(x), static_cast<VertexId>(x + 1), coupling});
  return build_graph(spec);
}

Graph cycle(std::size_t num_vertices, const Rational& coupling) {
  GraphSpec spec;
  for (std::size_t x = 0; x < num_vertices; ++x) spec.vertices.push_back(static_cast<VertexId>(x));
  for (std::size_t x = 0; x < num_vertices; ++x)
    spec.edges.push_back(
        {static_cast<VertexId>(x), static_cast<VertexId>((x + 1) % num_vertices), coupling});
  return build_graph(spec);
}

}  // namespace instances

}  // namespace xyrc
