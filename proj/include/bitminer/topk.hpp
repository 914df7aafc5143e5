#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "bitminer/counters.hpp"
#include "bitminer/dataset.hpp"
#include "bitminer/search.hpp"
#include "bitminer/types.hpp"

namespace bitminer {

/// The K most frequent itemsets offered so far, with every tie at the K-th
/// support kept. Entries are bucketed by support, which also serves superset
/// lookups for a given support.
class TopKList {
 public:
  explicit TopKList(std::size_t k) : k_(k) {}

  /// Caller guarantees support >= threshold(). Returns the threshold after
  /// the insert.
  Support offer(Itemset itemset);

  Support threshold() const { return xi_; }
  const std::vector<Support>& threshold_log() const { return log_; }
  std::size_t size() const { return count_; }

  /// True if a stored entry with exactly `support` contains every item of
  /// `items` (both sorted) and is strictly larger.
  bool has_superset_with_support(std::span<const ItemId> items, Support support) const;

  /// Support descending, then length ascending, then items ascending.
  std::vector<Itemset> results() const;

 private:
  std::size_t k_;
  std::map<Support, std::vector<Itemset>, std::greater<>> buckets_;
  std::size_t count_ = 0;
  Support xi_ = 0;
  std::vector<Support> log_;
};

struct TopKConfig {
  std::size_t k = 10;
  std::size_t min_length = 1;
  TailOrder order = TailOrder::decreasing;
  bool pair_prune = true;
  bool fused = true;
  unsigned word_width = 64;
  unsigned bits_per_region = 0;
  std::size_t arena_capacity = 0;
  /// Try the stored-superset test before the exact closedness check.
  bool list_prefilter = true;
  NodeObserver observer;
};

struct TopKResult {
  std::vector<Itemset> itemsets;
  Support final_threshold = 0;
  std::vector<Support> threshold_log;
  MiningCounters counters;
};

/// Closed itemsets of length >= min_length whose support reaches the K-th
/// highest such support, boundary ties included.
TopKResult mine_topk(const TransactionDataset& ds, const TopKConfig& cfg);

/// True iff no single item outside `node.head` extends it at equal support.
/// Only tail and exclusion items need testing: anything pruned on the way
/// down has support below the threshold the head itself meets. The node's
/// tail must already be counted.
template <BitWord Word>
bool is_closed(const SearchNode<Word>& node, Expander<Word>& expander,
               const PairSupportTable* pairs = nullptr) {
  for (const auto& e : node.tail) {
    if (e.support == node.support) return false;
  }
  bool closed = true;
  for_each_exclusion(node, [&](ItemId i) {
    if (!closed) return;
    if (pairs != nullptr) {
      for (ItemId a : node.head) {
        if (pairs->get(a, i) < node.support) return;
      }
    }
    if (expander.count_with(node, i) == node.support) closed = false;
  });
  return closed;
}

}  // namespace bitminer
