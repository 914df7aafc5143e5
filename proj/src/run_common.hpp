#pragma once

// Helpers shared by the two miner drivers.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitminer/search.hpp"

namespace bitminer::detail {

inline void check_word_width(unsigned width) {
  if (width != 32 && width != 64) {
    throw std::invalid_argument("word width must be 32 or 64, got " + std::to_string(width));
  }
}

/// Maps dense ids of the remapped dataset back to input ids, sorted.
inline std::vector<ItemId> to_original(const std::vector<ItemId>& items,
                                       const std::vector<ItemId>& original_id) {
  std::vector<ItemId> out;
  out.reserve(items.size());
  for (ItemId i : items) out.push_back(original_id[i]);
  std::sort(out.begin(), out.end());
  return out;
}

inline NodeObserver translate_observer(const NodeObserver& inner, const std::vector<ItemId>& original_id) {
  if (!inner) return {};
  return [inner, &original_id](const NodeTrace& t) {
    NodeTrace out = t;
    for (auto& i : out.head) i = original_id[i];
    for (auto& c : out.counted) c.item = original_id[c.item];
    for (auto& c : out.kept) c.item = original_id[c.item];
    inner(out);
  };
}

/// Releases the arena back to the mark taken at construction.
template <BitWord Word>
class ArenaScope {
 public:
  explicit ArenaScope(NodeArena<Word>& arena) : arena_(arena), mark_(arena.mark()) {}
  ~ArenaScope() { arena_.release(mark_); }
  ArenaScope(const ArenaScope&) = delete;
  ArenaScope& operator=(const ArenaScope&) = delete;

 private:
  NodeArena<Word>& arena_;
  typename NodeArena<Word>::Mark mark_;
};

}  // namespace bitminer::detail
