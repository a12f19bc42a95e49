#include "xyrc/multigraph.hpp"

#include <optional>
#include <stdexcept>

namespace xyrc {

Multigraph::Multigraph(const Graph& graph, EdgeAmplitude amplitude)
    : graph_(&graph), amplitude_(std::move(amplitude)) {
  if (amplitude_.size() != graph.num_edges()) throw std::invalid_argument("amplitude has wrong number of edges");
  offsets_.reserve(graph.num_edges());
  for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
    offsets_.push_back(slot_edge_.size());
    slot_edge_.insert(slot_edge_.end(), amplitude_[e], e);
  }
}

namespace {

void check_size(const Multigraph& m, std::size_t slots) {
  if (slots != m.num_slots()) throw std::invalid_argument("configuration does not match the multigraph's slots");
}

void add_oriented(const Graph& graph, EdgeIndex e, Direction d, std::int64_t amount, SourceFunction& out) {
  const Edge& edge = graph.edge(e);
  const std::int64_t sign = d == Direction::Fwd ? 1 : -1;
  out[edge.tail] += sign * amount;
  out[edge.head] -= sign * amount;
}

/// Vertices that become fully determined after each step of an edge- or
/// slot-ordered walk, plus vertices that are never touched.
struct SettleSchedule {
  std::vector<std::vector<VertexId>> after_step;
  std::vector<VertexId> untouched;
};

SettleSchedule edge_schedule(const Graph& graph) {
  SettleSchedule s{std::vector<std::vector<VertexId>>(graph.num_edges()), {}};
  for (VertexId x = 0; x < graph.num_vertices(); ++x) {
    const auto inc = graph.incident(x);
    if (inc.empty())
      s.untouched.push_back(x);
    else
      s.after_step[inc.back()].push_back(x);
  }
  return s;
}

SettleSchedule slot_schedule(const Multigraph& m) {
  const Graph& graph = m.graph();
  SettleSchedule s{std::vector<std::vector<VertexId>>(m.num_slots()), {}};
  for (VertexId x = 0; x < graph.num_vertices(); ++x) {
    std::optional<std::size_t> last;
    for (EdgeIndex e : graph.incident(x))
      if (m.amplitude()[e] != 0) last = m.offset(e) + m.amplitude()[e] - 1;
    if (last)
      s.after_step[*last].push_back(x);
    else
      s.untouched.push_back(x);
  }
  return s;
}

bool matches(const std::vector<VertexId>& vertices, const SourceFunction& partial, const SourceFunction& target) {
  for (VertexId x : vertices)
    if (partial[x] != target[x]) return false;
  return true;
}

constexpr SlotState kSlotStates[4] = {{Color::Red, Direction::Fwd},
                                      {Color::Red, Direction::Bwd},
                                      {Color::Blue, Direction::Fwd},
                                      {Color::Blue, Direction::Bwd}};

/// Slot-by-slot exhaustive walk over all 4^{slots} colored configurations.
/// With targets, branches are cut when a settled vertex disagrees.
class ConfigWalker {
 public:
  using Leaf = std::function<void(const ColoredConfig&, const ColorSources&)>;

  ConfigWalker(const Multigraph& m, const ColorSources* target, Leaf leaf)
      : m_(m), target_(target), leaf_(std::move(leaf)), schedule_(slot_schedule(m)),
        config_{std::vector<SlotState>(m.num_slots(), kSlotStates[0])},
        partial_{m.graph().zero_source(), m.graph().zero_source()} {}

  void run() {
    if (target_) {
      if (target_->red.total() != 0 || target_->blue.total() != 0) return;
      if (!matches(schedule_.untouched, partial_.red, target_->red) ||
          !matches(schedule_.untouched, partial_.blue, target_->blue))
        return;
    }
    walk(0);
  }

 private:
  void walk(std::size_t slot) {
    if (slot == m_.num_slots()) {
      leaf_(config_, partial_);
      return;
    }
    const EdgeIndex e = m_.slot_edge(slot);
    for (const SlotState& state : kSlotStates) {
      SourceFunction& side = state.color == Color::Red ? partial_.red : partial_.blue;
      add_oriented(m_.graph(), e, state.direction, 1, side);
      config_.slots[slot] = state;
      if (!target_ || (matches(schedule_.after_step[slot], partial_.red, target_->red) &&
                       matches(schedule_.after_step[slot], partial_.blue, target_->blue)))
        walk(slot + 1);
      add_oriented(m_.graph(), e, state.direction, -1, side);
    }
  }

  const Multigraph& m_;
  const ColorSources* target_;
  Leaf leaf_;
  SettleSchedule schedule_;
  ColoredConfig config_;
  ColorSources partial_;
};

/// Edge-by-edge walk over current pairs (n, m) with |n + m| = N, weighting each
/// by Π_e N_e! / (n_{x→y}! n_{y→x}! m_{x→y}! m_{y→x}!).
class MultinomialWalker {
 public:
  using Leaf = std::function<void(const ColorSources&, const BigInt&)>;

  MultinomialWalker(const Graph& graph, const EdgeAmplitude& amplitude, const ColorSources* target, Leaf leaf)
      : graph_(graph), amplitude_(amplitude), target_(target), leaf_(std::move(leaf)),
        schedule_(edge_schedule(graph)), partial_{graph.zero_source(), graph.zero_source()} {}

  void run() {
    if (target_) {
      if (target_->red.total() != 0 || target_->blue.total() != 0) return;
      if (!matches(schedule_.untouched, partial_.red, target_->red) ||
          !matches(schedule_.untouched, partial_.blue, target_->blue))
        return;
    }
    walk(0, BigInt(1));
  }

 private:
  void walk(EdgeIndex e, const BigInt& product) {
    if (e == graph_.num_edges()) {
      leaf_(partial_, product);
      return;
    }
    const std::uint64_t total = amplitude_[e];
    for (std::uint64_t rf = 0; rf <= total; ++rf)
      for (std::uint64_t rb = 0; rf + rb <= total; ++rb)
        for (std::uint64_t bf = 0; rf + rb + bf <= total; ++bf) {
          const std::uint64_t bb = total - rf - rb - bf;
          const auto red_net = static_cast<std::int64_t>(rf) - static_cast<std::int64_t>(rb);
          const auto blue_net = static_cast<std::int64_t>(bf) - static_cast<std::int64_t>(bb);
          add_oriented(graph_, e, Direction::Fwd, red_net, partial_.red);
          add_oriented(graph_, e, Direction::Fwd, blue_net, partial_.blue);
          if (!target_ || (matches(schedule_.after_step[e], partial_.red, target_->red) &&
                           matches(schedule_.after_step[e], partial_.blue, target_->blue)))
            walk(e + 1, product * multinomial4(rf, rb, bf, bb));
          add_oriented(graph_, e, Direction::Fwd, -red_net, partial_.red);
          add_oriented(graph_, e, Direction::Fwd, -blue_net, partial_.blue);
        }
  }

  const Graph& graph_;
  const EdgeAmplitude& amplitude_;
  const ColorSources* target_;
  Leaf leaf_;
  SettleSchedule schedule_;
  ColorSources partial_;
};

/// Edge-by-edge walk over single currents with |n| = N, weight Π_e C(N_e, n_{x→y}).
class OneColorWalker {
 public:
  using Leaf = std::function<void(const SourceFunction&, const BigInt&)>;

  OneColorWalker(const Graph& graph, const EdgeAmplitude& amplitude, const SourceFunction* target, Leaf leaf)
      : graph_(graph), amplitude_(amplitude), target_(target), leaf_(std::move(leaf)),
        schedule_(edge_schedule(graph)), partial_(graph.zero_source()) {}

  void run() {
    if (target_) {
      if (target_->total() != 0) return;
      if (!matches(schedule_.untouched, partial_, *target_)) return;
    }
    walk(0, BigInt(1));
  }

 private:
  void walk(EdgeIndex e, const BigInt& product) {
    if (e == graph_.num_edges()) {
      leaf_(partial_, product);
      return;
    }
    const std::uint64_t total = amplitude_[e];
    for (std::uint64_t fwd = 0; fwd <= total; ++fwd) {
      const auto net = 2 * static_cast<std::int64_t>(fwd) - static_cast<std::int64_t>(total);
      add_oriented(graph_, e, Direction::Fwd, net, partial_);
      if (!target_ || matches(schedule_.after_step[e], partial_, *target_))
        walk(e + 1, product * binomial(total, fwd));
      add_oriented(graph_, e, Direction::Fwd, -net, partial_);
    }
  }

  const Graph& graph_;
  const EdgeAmplitude& amplitude_;
  const SourceFunction* target_;
  Leaf leaf_;
  SettleSchedule schedule_;
  SourceFunction partial_;
};

void check_sources(const Graph& graph, const SourceFunction& f) {
  if (f.size() != graph.num_vertices()) throw std::invalid_argument("source function has wrong number of vertices");
}

}  // namespace

ColorSources sources_of_config(const Multigraph& m, const ColoredConfig& config) {
  check_size(m, config.slots.size());
  ColorSources out{m.graph().zero_source(), m.graph().zero_source()};
  for (std::size_t s = 0; s < config.slots.size(); ++s) {
    const SlotState& state = config.slots[s];
    add_oriented(m.graph(), m.slot_edge(s), state.direction, 1, state.color == Color::Red ? out.red : out.blue);
  }
  return out;
}

SourceFunction source_of_orientation(const Multigraph& m, const OrientedConfig& config) {
  check_size(m, config.slots.size());
  SourceFunction out = m.graph().zero_source();
  for (std::size_t s = 0; s < config.slots.size(); ++s) add_oriented(m.graph(), m.slot_edge(s), config.slots[s], 1, out);
  return out;
}

namespace {

Current color_current(const Multigraph& m, const ColoredConfig& config, Color color) {
  check_size(m, config.slots.size());
  Current n(m.graph());
  for (std::size_t s = 0; s < config.slots.size(); ++s) {
    if (config.slots[s].color != color) continue;
    const EdgeIndex e = m.slot_edge(s);
    ++(config.slots[s].direction == Direction::Fwd ? n.forward(e) : n.backward(e));
  }
  return n;
}

}  // namespace

Current red_current(const Multigraph& m, const ColoredConfig& config) { return color_current(m, config, Color::Red); }
Current blue_current(const Multigraph& m, const ColoredConfig& config) { return color_current(m, config, Color::Blue); }

ColoredConfig decode_colored(std::size_t num_slots, std::uint64_t index) {
  ColoredConfig out{std::vector<SlotState>(num_slots)};
  for (std::size_t s = num_slots; s-- > 0;) {
    out.slots[s] = kSlotStates[index & 3U];
    index >>= 2U;
  }
  return out;
}

OrientedConfig decode_oriented(std::size_t num_slots, std::uint64_t index) {
  OrientedConfig out{std::vector<Direction>(num_slots)};
  for (std::size_t s = num_slots; s-- > 0;) {
    out.slots[s] = (index & 1U) ? Direction::Bwd : Direction::Fwd;
    index >>= 1U;
  }
  return out;
}

void for_each_config(const Multigraph& m, const SourceFunction& red_source, const SourceFunction& blue_source,
                     const ConfigVisitor& visit) {
  check_sources(m.graph(), red_source);
  check_sources(m.graph(), blue_source);
  const ColorSources target{red_source, blue_source};
  ConfigWalker(m, &target, [&](const ColoredConfig& c, const ColorSources&) { visit(c); }).run();
}

std::vector<ColoredConfig> enumerate_configs(const Multigraph& m, const SourceFunction& red_source,
                                             const SourceFunction& blue_source) {
  std::vector<ColoredConfig> out;
  for_each_config(m, red_source, blue_source, [&](const ColoredConfig& c) { out.push_back(c); });
  return out;
}

BigInt count_two_color(const Graph& graph, const EdgeAmplitude& amplitude, const SourceFunction& f,
                       const SourceFunction& g, CountMethod method) {
  check_sources(graph, f);
  check_sources(graph, g);
  BigInt count = 0;
  if (method == CountMethod::Direct) {
    const Multigraph m(graph, amplitude);
    for_each_config(m, f, g, [&](const ColoredConfig&) { ++count; });
  } else {
    if (amplitude.size() != graph.num_edges()) throw std::invalid_argument("amplitude has wrong number of edges");
    const ColorSources target{f, g};
    MultinomialWalker(graph, amplitude, &target, [&](const ColorSources&, const BigInt& w) { count += w; }).run();
  }
  return count;
}

BigInt count_one_color(const Graph& graph, const EdgeAmplitude& amplitude, const SourceFunction& f) {
  check_sources(graph, f);
  if (amplitude.size() != graph.num_edges()) throw std::invalid_argument("amplitude has wrong number of edges");
  BigInt count = 0;
  OneColorWalker(graph, amplitude, &f, [&](const SourceFunction&, const BigInt& w) { count += w; }).run();
  return count;
}

BigInt count_one_color_direct(const Graph& graph, const EdgeAmplitude& amplitude, const SourceFunction& f) {
  check_sources(graph, f);
  const Multigraph m(graph, amplitude);
  if (m.num_slots() >= 63) throw std::invalid_argument("too many slots for exhaustive orientation count");
  BigInt count = 0;
  const std::uint64_t space = std::uint64_t{1} << m.num_slots();
  for (std::uint64_t i = 0; i < space; ++i)
    if (source_of_orientation(m, decode_oriented(m.num_slots(), i)) == f) ++count;
  return count;
}

TwoColorTable two_color_table(const Graph& graph, const EdgeAmplitude& amplitude, CountMethod method) {
  TwoColorTable table;
  if (method == CountMethod::Direct) {
    const Multigraph m(graph, amplitude);
    ConfigWalker(m, nullptr, [&](const ColoredConfig&, const ColorSources& s) { ++table[{s.red, s.blue}]; }).run();
  } else {
    if (amplitude.size() != graph.num_edges()) throw std::invalid_argument("amplitude has wrong number of edges");
    MultinomialWalker(graph, amplitude, nullptr,
                      [&](const ColorSources& s, const BigInt& w) { table[{s.red, s.blue}] += w; })
        .run();
  }
  return table;
}

OneColorTable one_color_table(const Graph& graph, const EdgeAmplitude& amplitude) {
  if (amplitude.size() != graph.num_edges()) throw std::invalid_argument("amplitude has wrong number of edges");
  OneColorTable table;
  OneColorWalker(graph, amplitude, nullptr, [&](const SourceFunction& s, const BigInt& w) { table[s] += w; }).run();
  return table;
}

}  // namespace xyrc
