#include "xyrc/bijection.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace xyrc {

SplitPair split(const ColoredConfig& config) {
  SplitPair pair;
  pair.red_part.slots.reserve(config.slots.size());
  pair.blue_part.slots.reserve(config.slots.size());
  for (const SlotState& s : config.slots) {
    pair.red_part.slots.push_back(s.direction);
    pair.blue_part.slots.push_back(s.color == Color::Blue ? s.direction : reverse(s.direction));
  }
  return pair;
}

ColoredConfig merge(const SplitPair& pair) {
  if (pair.red_part.slots.size() != pair.blue_part.slots.size())
    throw std::invalid_argument("split pair parts live on different multigraphs");
  ColoredConfig config;
  config.slots.reserve(pair.red_part.slots.size());
  for (std::size_t s = 0; s < pair.red_part.slots.size(); ++s) {
    const Direction d = pair.red_part.slots[s];
    config.slots.push_back({d == pair.blue_part.slots[s] ? Color::Blue : Color::Red, d});
  }
  return config;
}

std::string to_string(BijectionFailure::Kind kind) {
  switch (kind) {
    case BijectionFailure::Kind::MergeSplit: return "merge_split";
    case BijectionFailure::Kind::SplitMerge: return "split_merge";
    case BijectionFailure::Kind::SourceMapping: return "source_mapping";
    case BijectionFailure::Kind::ClassSize: return "class_size";
  }
  return "unknown";
}

namespace {

std::string describe(const ColoredConfig& c) {
  std::string out;
  for (const auto& s : c.slots) {
    out += s.color == Color::Red ? 'R' : 'B';
    out += s.direction == Direction::Fwd ? '+' : '-';
  }
  return out;
}

std::string describe(const OrientedConfig& c) {
  std::string out;
  for (Direction d : c.slots) out += d == Direction::Fwd ? '+' : '-';
  return out;
}

class Recorder {
 public:
  Recorder(BijectionReport& report, std::size_t limit) : report_(report), limit_(limit) {}

  void fail(BijectionFailure::Kind kind, std::string detail) {
    ++report_.failure_count;
    if (report_.failures.size() < limit_) report_.failures.push_back({kind, std::move(detail)});
  }

 private:
  BijectionReport& report_;
  std::size_t limit_;
};

}  // namespace

BijectionReport verify_bijection(const Graph& graph, const EdgeAmplitude& amplitude, std::size_t max_recorded_failures) {
  const Multigraph m(graph, amplitude);
  const std::size_t slots = m.num_slots();
  if (2 * slots >= 64) throw std::invalid_argument("multigraph too large for exhaustive verification");

  BijectionReport report;
  report.amplitude = amplitude;
  Recorder rec(report, max_recorded_failures);
  const std::uint64_t space = std::uint64_t{1} << (2 * slots);

  // (f, g) -> number of colored configs in the class, and
  // (f+g, −f+g) -> number of orientation pairs with those sources.
  std::map<std::pair<SourceFunction, SourceFunction>, std::uint64_t> class_sizes;
  std::map<std::pair<SourceFunction, SourceFunction>, std::uint64_t> pair_sizes;

  for (std::uint64_t i = 0; i < space; ++i) {
    const ColoredConfig omega = decode_colored(slots, i);
    const ColorSources src = sources_of_config(m, omega);
    const SplitPair p = split(omega);
    ++report.configs_checked;
    if (merge(p) != omega) rec.fail(BijectionFailure::Kind::MergeSplit, describe(omega));
    const SourceFunction red = source_of_orientation(m, p.red_part);
    const SourceFunction blue = source_of_orientation(m, p.blue_part);
    if (red != src.red + src.blue || blue != src.blue - src.red) {
      std::ostringstream os;
      os << describe(omega) << " f=" << to_string(src.red) << " g=" << to_string(src.blue)
         << " red_part=" << to_string(red) << " blue_part=" << to_string(blue);
      rec.fail(BijectionFailure::Kind::SourceMapping, os.str());
    }
    ++class_sizes[{src.red, src.blue}];
  }

  const std::uint64_t half = std::uint64_t{1} << slots;
  for (std::uint64_t i = 0; i < space; ++i) {
    const SplitPair p{decode_oriented(slots, i / half), decode_oriented(slots, i % half)};
    ++report.pairs_checked;
    const ColoredConfig omega = merge(p);
    if (split(omega) != p)
      rec.fail(BijectionFailure::Kind::SplitMerge, describe(p.red_part) + "|" + describe(p.blue_part));
    const SourceFunction red = source_of_orientation(m, p.red_part);
    const SourceFunction blue = source_of_orientation(m, p.blue_part);
    const ColorSources merged = sources_of_config(m, omega);
    if (merged.red + merged.blue != red || merged.blue - merged.red != blue) {
      std::ostringstream os;
      os << describe(p.red_part) << "|" << describe(p.blue_part) << " merged f=" << to_string(merged.red)
         << " g=" << to_string(merged.blue);
      rec.fail(BijectionFailure::Kind::SourceMapping, os.str());
    }
    ++pair_sizes[{red, blue}];
  }

  // Every class seen on either side must match the one-color product count.
  std::map<std::pair<SourceFunction, SourceFunction>, bool> classes;
  for (const auto& [fg, size] : class_sizes) classes[fg] = true;
  for (const auto& [images, size] : pair_sizes) {
    // f = (h1 − h2)/2, g = (h1 + h2)/2; integrality holds for any realizable pair.
    SourceFunction f = images.first - images.second;
    SourceFunction g = images.first + images.second;
    for (std::size_t x = 0; x < f.size(); ++x) {
      f[x] /= 2;
      g[x] /= 2;
    }
    classes[{f, g}] = true;
  }
  for (const auto& [fg, unused] : classes) {
    const auto& [f, g] = fg;
    ++report.classes_checked;
    const auto cs = class_sizes.find(fg);
    const std::uint64_t class_size = cs == class_sizes.end() ? 0 : cs->second;
    const auto ps = pair_sizes.find({f + g, g - f});
    const std::uint64_t pair_size = ps == pair_sizes.end() ? 0 : ps->second;
    const BigInt product = count_one_color(graph, amplitude, f + g) * count_one_color(graph, amplitude, g - f);
    if (BigInt(class_size) != product || BigInt(pair_size) != product) {
      std::ostringstream os;
      os << "f=" << to_string(f) << " g=" << to_string(g) << " |class|=" << class_size << " |pairs|=" << pair_size
         << " product=" << product;
      rec.fail(BijectionFailure::Kind::ClassSize, os.str());
    }
  }
  return report;
}

}  // namespace xyrc
