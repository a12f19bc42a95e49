#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "xyrc/current.hpp"
#include "xyrc/graph.hpp"
#include "xyrc/rational.hpp"

namespace xyrc {

enum class Color : std::uint8_t { Red, Blue };
enum class Direction : std::uint8_t { Fwd, Bwd };  // relative to the canonical tail < head orientation

constexpr Direction reverse(Direction d) noexcept { return d == Direction::Fwd ? Direction::Bwd : Direction::Fwd; }

struct SlotState {
  Color color;
  Direction direction;
  friend bool operator==(const SlotState&, const SlotState&) = default;
};

/// 𝔾_N: N_e distinguishable parallel slots per edge e. Slots are numbered
/// globally, edge by edge, so the slots of edge e are
/// [offset(e), offset(e) + N_e).
class Multigraph {
 public:
  Multigraph(const Graph& graph, EdgeAmplitude amplitude);

  const Graph& graph() const noexcept { return *graph_; }
  const EdgeAmplitude& amplitude() const noexcept { return amplitude_; }
  std::size_t num_slots() const noexcept { return slot_edge_.size(); }
  EdgeIndex slot_edge(std::size_t slot) const { return slot_edge_.at(slot); }
  std::size_t offset(EdgeIndex e) const { return offsets_.at(e); }

  friend bool operator==(const Multigraph& a, const Multigraph& b) noexcept {
    return a.graph_ == b.graph_ && a.amplitude_ == b.amplitude_;
  }

 private:
  const Graph* graph_;
  EdgeAmplitude amplitude_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeIndex> slot_edge_;
};

/// Two-colored orientation ω of every slot of a multigraph.
struct ColoredConfig {
  std::vector<SlotState> slots;
  friend bool operator==(const ColoredConfig&, const ColoredConfig&) = default;
};

/// Colorless orientation ξ (also ω_R, ω_B once the uniform color is dropped).
struct OrientedConfig {
  std::vector<Direction> slots;
  friend bool operator==(const OrientedConfig&, const OrientedConfig&) = default;
};

struct ColorSources {
  SourceFunction red;
  SourceFunction blue;
  friend bool operator==(const ColorSources&, const ColorSources&) = default;
};

ColorSources sources_of_config(const Multigraph& multigraph, const ColoredConfig& config);
SourceFunction source_of_orientation(const Multigraph& multigraph, const OrientedConfig& config);

/// Slot-to-current reductions: r_{x→y}, b_{x→y} as Currents.
Current red_current(const Multigraph& multigraph, const ColoredConfig& config);
Current blue_current(const Multigraph& multigraph, const ColoredConfig& config);

/// Decodes the i-th element of the 4^{slots} configuration space. Slot 0 is the
/// most significant base-4 digit; digit = 2·color + direction. Increasing i is
/// lexicographic order over slots.
ColoredConfig decode_colored(std::size_t num_slots, std::uint64_t index);
OrientedConfig decode_oriented(std::size_t num_slots, std::uint64_t index);

using ConfigVisitor = std::function<void(const ColoredConfig&)>;

/// Visits the ColoredConfigs with ∂r = red_source and ∂b = blue_source, in
/// slot-lexicographic order. Exhaustive over 4^{Σ N}.
void for_each_config(const Multigraph& multigraph, const SourceFunction& red_source,
                     const SourceFunction& blue_source, const ConfigVisitor& visit);

std::vector<ColoredConfig> enumerate_configs(const Multigraph& multigraph, const SourceFunction& red_source,
                                             const SourceFunction& blue_source);

enum class CountMethod { Direct, Multinomial };

/// #{∂r = f, ∂b = g}_N. Nonzero-sum f or g yields 0.
BigInt count_two_color(const Graph& graph, const EdgeAmplitude& amplitude, const SourceFunction& f,
                       const SourceFunction& g, CountMethod method = CountMethod::Multinomial);

/// #{∂r = f}_N = Σ_{|n| = N, ∂n = f} Π_e C(N_e, n_{x→y}).
BigInt count_one_color(const Graph& graph, const EdgeAmplitude& amplitude, const SourceFunction& f);

/// #{∂r = f} by exhaustion over all 2^{Σ N} orientations. Test oracle.
BigInt count_one_color_direct(const Graph& graph, const EdgeAmplitude& amplitude, const SourceFunction& f);

/// Every realizable (∂r, ∂b) on 𝔾_N with its count, in one pass.
using TwoColorTable = std::map<std::pair<SourceFunction, SourceFunction>, BigInt>;
/// Every realizable ∂r on 𝔾_N with its count.
using OneColorTable = std::map<SourceFunction, BigInt>;

TwoColorTable two_color_table(const Graph& graph, const EdgeAmplitude& amplitude,
                              CountMethod method = CountMethod::Multinomial);
OneColorTable one_color_table(const Graph& graph, const EdgeAmplitude& amplitude);

template <class Table, class Key>
BigInt lookup(const Table& table, const Key& key) {
  const auto it = table.find(key);
  return it == table.end() ? BigInt(0) : it->second;
}

}  // namespace xyrc
