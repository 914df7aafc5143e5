#pragma once

// Depth-first set-enumeration machinery shared by both miners.

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "bitminer/bitmat.hpp"
#include "bitminer/counters.hpp"
#include "bitminer/types.hpp"

namespace bitminer {

struct TailSupport {
  ItemId item = 0;
  Support support = 0;
};

/// Stable sort by support under `order`; equal supports keep ascending id.
void order_tail(std::vector<TailSupport>& tail, TailOrder order);

/// Exact 2-itemset supports over the items of one matrix, upper triangle only.
class PairSupportTable {
 public:
  PairSupportTable() = default;
  explicit PairSupportTable(std::size_t num_items)
      : n_(num_items), cells_(num_items < 2 ? 0 : num_items * (num_items - 1) / 2, 0) {}

  std::size_t num_items() const { return n_; }
  std::size_t size() const { return cells_.size(); }

  Support get(ItemId a, ItemId b) const { return cells_[index(a, b)]; }
  void set(ItemId a, ItemId b, Support s) { cells_[index(a, b)] = s; }

 private:
  std::size_t index(ItemId a, ItemId b) const {
    if (a > b) std::swap(a, b);
    assert(a != b && b < n_);
    // row a holds b in (a, n): offset = a*n - a*(a+1)/2 + (b - a - 1)
    return static_cast<std::size_t>(a) * n_ - static_cast<std::size_t>(a) * (a + 1) / 2 + (b - a - 1);
  }

  std::size_t n_ = 0;
  std::vector<Support> cells_;
};

template <BitWord Word>
PairSupportTable build_pair_table(const BitMatrix<Word>& matrix) {
  const auto n = static_cast<ItemId>(matrix.num_items());
  PairSupportTable table(n);
  for (ItemId a = 0; a + 1 < n; ++a) {
    const auto pbr = root_pbr<Word>(matrix.row(a));
    const auto head = gather<Word>(matrix.row(a), pbr);
    for (ItemId b = a + 1; b < n; ++b) {
      table.set(a, b, count_and<Word>(head, matrix.row(b), pbr));
    }
  }
  return table;
}

/// True if some head item pairs with `x` below `bound`, which caps the support
/// of head ∪ {x} below the bound.
bool pair_prune(std::span<const ItemId> head, ItemId x, const PairSupportTable& table, Support bound);

/// A counted tail item and, when already built, its child projection.
template <BitWord Word>
struct TailEntry {
  ItemId item = 0;
  Support support = 0;
  Projection<Word> child;
  bool materialized = false;
  unsigned passes = 0;
};

template <BitWord Word>
struct SearchNode {
  /// Exclusion chain: parent's tail entries before `branch` are ordered ahead
  /// of this node's branch.
  const SearchNode* parent = nullptr;
  std::size_t branch = 0;

  std::vector<ItemId> head;  // in expansion order, not sorted
  Support support = 0;
  std::span<const Word> words;
  std::span<const RegionIndex> pbr;
  /// Items still to be counted against the head.
  std::span<const TailEntry<Word>> candidates;
  /// Counted, pruned, ordered tail.
  std::vector<TailEntry<Word>> tail;

  std::size_t depth() const { return head.size(); }
  bool is_root() const { return parent == nullptr; }
};

template <BitWord Word, class Fn>
void for_each_exclusion(const SearchNode<Word>& node, Fn&& fn) {
  for (const SearchNode<Word>* n = &node; n->parent != nullptr; n = n->parent) {
    for (std::size_t i = 0; i < n->branch; ++i) fn(n->parent->tail[i].item);
  }
}

template <BitWord Word>
std::vector<ItemId> exclusion_of(const SearchNode<Word>& node) {
  std::vector<ItemId> out;
  for_each_exclusion(node, [&](ItemId i) { out.push_back(i); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Snapshot of one counting step, for tracing runs.
struct NodeTrace {
  std::vector<ItemId> head;
  Support support = 0;
  std::vector<RegionIndex> pbr;
  std::vector<TailSupport> counted;  // every candidate that was counted
  std::vector<TailSupport> kept;     // after pruning and ordering
};

using NodeObserver = std::function<void(const NodeTrace&)>;

struct ExpanderOptions {
  TailOrder order = TailOrder::decreasing;
  bool pair_prune = true;
  bool fused = true;
};

/// Counting, ordering and child construction for one mining run. Owns the
/// run's arena and path buffers; reads the shared matrix and pair table.
template <BitWord Word>
class Expander {
 public:
  Expander(const BitMatrix<Word>& matrix, const PairSupportTable* pairs, ExpanderOptions options,
           std::size_t arena_capacity, MiningCounters& counters)
      : matrix_(matrix), pairs_(pairs), options_(options), arena_(arena_capacity), counters_(counters) {}

  NodeArena<Word>& arena() { return arena_; }
  const BitMatrix<Word>& matrix() const { return matrix_; }
  const ExpanderOptions& options() const { return options_; }
  void set_observer(NodeObserver obs) { observer_ = std::move(obs); }

  /// Root node over every item of the matrix with support >= 1. Root tail
  /// entries carry the compact item rows as their child projections.
  SearchNode<Word> make_root() {
    root_words_.clear();
    root_pbr_.clear();
    std::vector<TailSupport> items;
    for (ItemId i = 0; i < matrix_.num_items(); ++i) {
      const Support s = matrix_.support(i);
      if (s > 0) items.push_back({i, s});
    }
    order_tail(items, options_.order);
    root_words_.resize(items.size());
    root_pbr_.resize(items.size());
    SearchNode<Word> root;
    root.support = static_cast<Support>(matrix_.num_transactions());
    for (std::size_t k = 0; k < items.size(); ++k) {
      root_pbr_[k] = root_pbr<Word>(matrix_.row(items[k].item));
      root_words_[k] = gather<Word>(matrix_.row(items[k].item), root_pbr_[k]);
      TailEntry<Word> e;
      e.item = items[k].item;
      e.support = items[k].support;
      e.child = Projection<Word>{root_words_[k], root_pbr_[k], items[k].support};
      e.materialized = true;
      root.tail.push_back(e);
    }
    return root;
  }

  /// Counts every candidate against the head and keeps those with support
  /// >= bound (bound >= 1). When `fuse` is set, the child projection is
  /// written to the arena in the same pass; a full arena falls back to
  /// counting only. Fills node.tail in the configured order.
  void count_tail(SearchNode<Word>& node, Support bound, bool fuse) {
    ++counters_.nodes_expanded;
    NodeTrace trace;
    const bool tracing = static_cast<bool>(observer_);
    node.tail.clear();
    node.tail.reserve(node.candidates.size());
    const std::uint64_t skipped = matrix_.num_words() - node.pbr.size();
    const bool use_fused = fuse && options_.fused;
    for (const auto& cand : node.candidates) {
      if (options_.pair_prune && pairs_ != nullptr && pair_prune(node.head, cand.item, *pairs_, bound)) {
        ++counters_.pair_prune_hits;
        continue;
      }
      TailEntry<Word> e;
      e.item = cand.item;
      e.passes = 1;
      ++counters_.and_passes;
      counters_.and_word_ops += node.pbr.size();
      counters_.skipped_words += skipped;
      const auto row = matrix_.row(cand.item);
      std::optional<Projection<Word>> fused;
      if (use_fused) {
        const auto mark = arena_.mark();
        fused = arena_.project(node.words, row, node.pbr);
        if (fused) {
          ++counters_.fused_passes;
          e.support = fused->support;
          if (e.support < bound) {
            arena_.release(mark);
          } else {
            e.child = *fused;
            e.materialized = true;
          }
        } else {
          ++counters_.arena_fallbacks;
        }
      }
      if (!fused) e.support = count_and<Word>(node.words, row, node.pbr);
      if (tracing) trace.counted.push_back({e.item, e.support});
      if (e.support >= bound) node.tail.push_back(e);
    }
    counters_.arena_high_water = std::max<std::uint64_t>(counters_.arena_high_water, arena_.high_water());
    order_entries(node.tail);
    if (tracing) {
      trace.head = node.head;
      trace.support = node.support;
      trace.pbr.assign(node.pbr.begin(), node.pbr.end());
      for (const auto& e : node.tail) trace.kept.push_back({e.item, e.support});
      observer_(trace);
    }
  }

  /// Child for node.tail[pos]: head ∪ {x}, candidates = tail entries after x.
  /// Builds the projection with a second pass when it was not fused.
  SearchNode<Word> expand(const SearchNode<Word>& node, std::size_t pos) {
    const auto& e = node.tail[pos];
    SearchNode<Word> child;
    child.parent = &node;
    child.branch = pos;
    child.head = node.head;
    child.head.push_back(e.item);
    child.support = e.support;
    child.candidates = std::span<const TailEntry<Word>>(node.tail).subspan(pos + 1);
    unsigned passes = e.passes;
    if (e.materialized) {
      child.words = e.child.words;
      child.pbr = e.child.pbr;
    } else {
      ++counters_.and_passes;
      ++counters_.second_pass_projections;
      counters_.and_word_ops += node.pbr.size();
      counters_.skipped_words += matrix_.num_words() - node.pbr.size();
      ++passes;
      auto p = path_.project(child.depth(), node.words, matrix_.row(e.item), node.pbr);
      child.words = p.words;
      child.pbr = p.pbr;
    }
    if (!node.is_root()) {
      ++counters_.expansions;
      counters_.extension_passes += passes;
    }
    return child;
  }

  /// Support of node.head ∪ {item} by a plain counting pass.
  Support count_with(const SearchNode<Word>& node, ItemId item) {
    counters_.and_word_ops += node.pbr.size();
    return count_and<Word>(node.words, matrix_.row(item), node.pbr);
  }

 private:
  void order_entries(std::vector<TailEntry<Word>>& tail) const {
    auto by_id = [](const TailEntry<Word>& a, const TailEntry<Word>& b) { return a.item < b.item; };
    std::sort(tail.begin(), tail.end(), by_id);
    switch (options_.order) {
      case TailOrder::decreasing:
        std::stable_sort(tail.begin(), tail.end(),
                         [](const auto& a, const auto& b) { return a.support > b.support; });
        break;
      case TailOrder::increasing:
        std::stable_sort(tail.begin(), tail.end(),
                         [](const auto& a, const auto& b) { return a.support < b.support; });
        break;
      case TailOrder::by_id:
        break;
    }
  }

  const BitMatrix<Word>& matrix_;
  const PairSupportTable* pairs_;
  ExpanderOptions options_;
  NodeArena<Word> arena_;
  PathBuffers<Word> path_;
  MiningCounters& counters_;
  NodeObserver observer_;
  std::vector<std::vector<Word>> root_words_;
  std::vector<std::vector<RegionIndex>> root_pbr_;
};

}  // namespace bitminer
