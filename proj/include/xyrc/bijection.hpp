#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xyrc/multigraph.hpp"

namespace xyrc {

/// (ω_R, ω_B): two colorless orientations of the same 𝔾_N.
struct SplitPair {
  OrientedConfig red_part;
  OrientedConfig blue_part;
  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

/// ω ↦ (ω_R, ω_B). ω_R keeps every direction of ω; ω_B keeps blue slots and
/// reverses red ones. Sends {∂r=f, ∂b=g}_N into {∂r=f+g}_N × {∂b=−f+g}_N.
SplitPair split(const ColoredConfig& config);

/// Inverse of split: directions from ω_R, a slot is Blue where ω_R and ω_B
/// agree and Red where they differ. Throws std::invalid_argument when the two
/// parts have different slot counts.
ColoredConfig merge(const SplitPair& pair);

struct BijectionFailure {
  enum class Kind { MergeSplit, SplitMerge, SourceMapping, ClassSize };
  Kind kind;
  std::string detail;
};

std::string to_string(BijectionFailure::Kind kind);

struct BijectionReport {
  EdgeAmplitude amplitude;
  std::uint64_t configs_checked = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t classes_checked = 0;
  std::uint64_t failure_count = 0;
  /// First few counterexamples; failure_count has the full tally.
  std::vector<BijectionFailure> failures;

  std::uint64_t checked() const noexcept { return configs_checked + pairs_checked; }
  bool passed() const noexcept { return failure_count == 0; }
};

/// Exhausts all 4^{ΣN} colored configurations and all 4^{ΣN} orientation
/// pairs on 𝔾_N and checks both round trips, the source mapping
/// (f, g) → (f+g, −f+g), and |{∂r=f, ∂b=g}_N| = #{∂r=f+g}_N · #{∂r=−f+g}_N
/// for every class met by either side.
BijectionReport verify_bijection(const Graph& graph, const EdgeAmplitude& amplitude,
                                 std::size_t max_recorded_failures = 16);

}  // namespace xyrc
