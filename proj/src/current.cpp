#include "xyrc/current.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace xyrc {

std::uint64_t EdgeAmplitude::total() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), std::uint64_t{0});
}

std::uint64_t Current::at(const Graph& graph, VertexId u, VertexId v) const {
  const EdgeIndex e = graph.find_edge(u, v);
  if (e == graph.num_edges()) throw std::out_of_range("no edge between given vertices");
  return graph.edge(e).tail == u ? forward(e) : backward(e);
}

void Current::set(const Graph& graph, VertexId u, VertexId v, std::uint64_t value) {
  const EdgeIndex e = graph.find_edge(u, v);
  if (e == graph.num_edges()) throw std::out_of_range("no edge between given vertices");
  (graph.edge(e).tail == u ? forward(e) : backward(e)) = value;
}

Current Current::reversed() const {
  Current out = *this;
  for (std::size_t e = 0; e < num_edges(); ++e) std::swap(out.forward(e), out.backward(e));
  return out;
}

EdgeAmplitude amplitude(const Current& n) {
  EdgeAmplitude out(n.num_edges());
  for (EdgeIndex e = 0; e < n.num_edges(); ++e) out[e] = n.forward(e) + n.backward(e);
  return out;
}

SourceFunction source(const Current& n, const Graph& graph) {
  SourceFunction out = graph.zero_source();
  for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
    const auto net = static_cast<std::int64_t>(n.forward(e)) - static_cast<std::int64_t>(n.backward(e));
    out[graph.edge(e).tail] += net;
    out[graph.edge(e).head] -= net;
  }
  return out;
}

Rational weight(const Current& n, const Graph& graph) {
  Rational w = 1;
  for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
    const Rational half = graph.edge(e).coupling / 2;
    for (std::uint64_t value : {n.forward(e), n.backward(e)})
      if (value != 0) w *= pow(half, value) / factorial(value);
  }
  return w;
}

namespace {

class CurrentWalker {
 public:
  CurrentWalker(const Graph& graph, const CurrentConstraint& constraint,
                const std::optional<SourceFunction>& filter, const CurrentVisitor& visit)
      : graph_(graph), constraint_(constraint), filter_(filter), visit_(visit), current_(graph),
        partial_(graph.zero_source()), settled_at_(graph.num_edges()) {
    // Vertices whose last incident edge is e can be checked against the filter once e is assigned.
    for (VertexId x = 0; x < graph.num_vertices(); ++x) {
      const auto inc = graph.incident(x);
      if (!inc.empty()) settled_at_[inc.back()].push_back(x);
    }
  }

  void run() {
    if (filter_) {
      if (filter_->size() != graph_.num_vertices())
        throw std::invalid_argument("source filter has wrong number of vertices");
      if (filter_->total() != 0) return;
      for (VertexId x = 0; x < graph_.num_vertices(); ++x)
        if (graph_.degree(x) == 0 && (*filter_)[x] != 0) return;
    }
    if (const auto* fixed = std::get_if<EdgeAmplitude>(&constraint_)) {
      if (fixed->size() != graph_.num_edges()) throw std::invalid_argument("amplitude has wrong number of edges");
    }
    walk(0, remaining_cap());
  }

 private:
  std::uint64_t remaining_cap() const {
    if (const auto* cap = std::get_if<DegreeCap>(&constraint_)) return cap->value;
    return 0;
  }

  bool settled_ok(EdgeIndex e) const {
    if (!filter_) return true;
    for (VertexId x : settled_at_[e])
      if (partial_[x] != (*filter_)[x]) return false;
    return true;
  }

  void assign(EdgeIndex e, std::uint64_t fwd, std::uint64_t bwd, std::uint64_t budget) {
    const Edge& edge = graph_.edge(e);
    const auto net = static_cast<std::int64_t>(fwd) - static_cast<std::int64_t>(bwd);
    current_.forward(e) = fwd;
    current_.backward(e) = bwd;
    partial_[edge.tail] += net;
    partial_[edge.head] -= net;
    if (settled_ok(e)) walk(e + 1, budget);
    partial_[edge.tail] -= net;
    partial_[edge.head] += net;
  }

  void walk(EdgeIndex e, std::uint64_t budget) {
    if (e == graph_.num_edges()) {
      visit_(current_);
      return;
    }
    if (const auto* fixed = std::get_if<EdgeAmplitude>(&constraint_)) {
      const std::uint64_t total = (*fixed)[e];
      for (std::uint64_t fwd = 0; fwd <= total; ++fwd) assign(e, fwd, total - fwd, 0);
    } else {
      for (std::uint64_t fwd = 0; fwd <= budget; ++fwd)
        for (std::uint64_t bwd = 0; fwd + bwd <= budget; ++bwd) assign(e, fwd, bwd, budget - fwd - bwd);
    }
    current_.forward(e) = 0;
    current_.backward(e) = 0;
  }

  const Graph& graph_;
  const CurrentConstraint& constraint_;
  const std::optional<SourceFunction>& filter_;
  const CurrentVisitor& visit_;
  Current current_;
  SourceFunction partial_;
  std::vector<std::vector<VertexId>> settled_at_;
};

void compositions(std::vector<std::uint64_t>& prefix, std::size_t num_edges, std::uint64_t budget,
                  std::vector<EdgeAmplitude>& out) {
  if (prefix.size() == num_edges) {
    out.emplace_back(prefix);
    return;
  }
  for (std::uint64_t v = 0; v <= budget; ++v) {
    prefix.push_back(v);
    compositions(prefix, num_edges, budget - v, out);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_current(const Graph& graph, const CurrentConstraint& constraint,
                      const std::optional<SourceFunction>& source_filter, const CurrentVisitor& visit) {
  CurrentWalker(graph, constraint, source_filter, visit).run();
}

std::vector<Current> enumerate_currents(const Graph& graph, const CurrentConstraint& constraint,
                                        const std::optional<SourceFunction>& source_filter) {
  std::vector<Current> out;
  for_each_current(graph, constraint, source_filter, [&](const Current& n) { out.push_back(n); });
  return out;
}

std::vector<EdgeAmplitude> amplitude_vectors(std::size_t num_edges, std::uint64_t sum_cap) {
  std::vector<EdgeAmplitude> out;
  std::vector<std::uint64_t> prefix;
  compositions(prefix, num_edges, sum_cap, out);
  return out;
}

}  // namespace xyrc
