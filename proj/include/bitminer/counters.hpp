#pragma once

#include <cstdint>

namespace bitminer {

/// Exact event counts collected during one mining run.
struct MiningCounters {
  std::uint64_t nodes_expanded = 0;
  /// One pass = one walk over a head's region list against one item row.
  std::uint64_t and_passes = 0;
  std::uint64_t and_word_ops = 0;
  /// Words outside the head's region list that a full-length AND would touch.
  std::uint64_t skipped_words = 0;
  std::uint64_t fused_passes = 0;
  std::uint64_t second_pass_projections = 0;
  std::uint64_t arena_fallbacks = 0;
  std::uint64_t pair_prune_hits = 0;
  /// Child nodes built from a non-root parent and descended into.
  std::uint64_t expansions = 0;
  /// AND passes spent on the (parent, item) pairs behind `expansions`.
  std::uint64_t extension_passes = 0;
  std::uint64_t closedness_checks = 0;
  std::uint64_t closedness_prefilter_hits = 0;
  std::uint64_t arena_high_water = 0;
};

}  // namespace bitminer
