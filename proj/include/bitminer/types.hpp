#pragma once

#include <cstdint>
#include <vector>

namespace bitminer {

/// Dense item index, 0..num_items-1 within one dataset.
using ItemId = std::uint32_t;
/// Item token exactly as it appeared in the input file.
using ItemLabel = std::uint64_t;
/// Number of transactions containing an itemset.
using Support = std::uint32_t;
/// Index of a word inside a bit-vector.
using RegionIndex = std::uint32_t;

/// An itemset together with its support. `items` is kept strictly increasing.
struct Itemset {
  std::vector<ItemId> items;
  Support support = 0;

  friend bool operator==(const Itemset&, const Itemset&) = default;
};

enum class TailOrder {
  decreasing,  // by support, high first
  increasing,  // by support, low first
  by_id,       // static item order; used for worked examples
};

}  // namespace bitminer
