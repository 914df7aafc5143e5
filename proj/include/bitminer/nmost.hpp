#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "bitminer/counters.hpp"
#include "bitminer/dataset.hpp"
#include "bitminer/search.hpp"
#include "bitminer/types.hpp"

namespace bitminer {

/// Per-length support thresholds xi_1..xi_kmax and their minimum xi. Every
/// change is appended to a log so monotonicity can be audited after a run.
class ThresholdVector {
 public:
  struct Change {
    std::size_t length = 0;  // 0 = the global xi
    Support value = 0;
  };

  explicit ThresholdVector(std::size_t kmax) : xi_k_(kmax, 0) {}

  std::size_t kmax() const { return xi_k_.size(); }
  /// Threshold for itemsets of length k (1-based).
  Support at(std::size_t k) const { return xi_k_[k - 1]; }
  Support global() const { return xi_; }
  const std::vector<Support>& per_length() const { return xi_k_; }
  const std::vector<Change>& log() const { return log_; }

  /// Raises xi_k; lowering is a logic error.
  void raise(std::size_t k, Support value);

 private:
  std::vector<Support> xi_k_;
  Support xi_ = 0;
  std::vector<Change> log_;
};

/// min(xi_j) over j in [depth+1, kmax]: the weakest threshold any itemset
/// below a node of this depth must meet.
Support effective_bound(std::size_t depth, const ThresholdVector& tv);

/// Per-length bounded collection that keeps every itemset tying the N-th
/// support.
class TopNCollector {
 public:
  TopNCollector(std::size_t n, std::size_t kmax) : n_(n), levels_(kmax), thresholds_(kmax) {}

  /// Caller guarantees support >= thresholds().at(itemset length).
  void offer(Itemset itemset);

  const ThresholdVector& thresholds() const { return thresholds_; }
  std::size_t size(std::size_t k) const { return levels_[k - 1].count; }

  /// Entries of length k, support descending then items ascending.
  std::vector<Itemset> results(std::size_t k) const;

 private:
  struct Level {
    std::map<Support, std::vector<Itemset>, std::greater<>> buckets;
    std::size_t count = 0;
  };
  std::size_t n_;
  std::vector<Level> levels_;
  ThresholdVector thresholds_;
};

struct NMostConfig {
  std::size_t n = 10;
  std::size_t kmax = 5;
  TailOrder order = TailOrder::decreasing;
  bool pair_prune = true;
  bool fused = true;
  unsigned word_width = 64;
  /// Transactions per word; 0 means the word width.
  unsigned bits_per_region = 0;
  /// Slots per arena heap; 0 means default_arena_capacity().
  std::size_t arena_capacity = 0;
  /// Drop items below the bootstrapped threshold before building bit-vectors.
  bool density_remap = true;
  /// Optional; head and tail ids are reported in the input dataset's ids.
  NodeObserver observer;
};

struct NMostResult {
  /// by_length[k-1] holds the k-itemsets, support descending, items ascending.
  std::vector<std::vector<Itemset>> by_length;
  std::vector<Support> final_thresholds;
  std::vector<ThresholdVector::Change> threshold_log;
  MiningCounters counters;

  std::size_t total() const;
};

/// All k-itemsets (1 <= k <= kmax) whose support reaches the N-th highest
/// k-itemset support; every tie at that boundary is returned.
NMostResult mine_nmost(const TransactionDataset& ds, const NMostConfig& cfg);

}  // namespace bitminer
