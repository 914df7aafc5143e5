#include "bitminer/topk.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "run_common.hpp"

namespace bitminer {

Support TopKList::offer(Itemset itemset) {
  const Support s = itemset.support;
  buckets_[s].push_back(std::move(itemset));
  ++count_;
  if (count_ < k_) return xi_;
  std::size_t kept = 0;
  auto it = buckets_.begin();
  for (;; ++it) {
    kept += it->second.size();
    if (kept >= k_) break;
  }
  buckets_.erase(std::next(it), buckets_.end());
  count_ = kept;
  if (it->first > xi_) {
    xi_ = it->first;
    log_.push_back(xi_);
  }
  return xi_;
}

bool TopKList::has_superset_with_support(std::span<const ItemId> items, Support support) const {
  auto it = buckets_.find(support);
  if (it == buckets_.end()) return false;
  for (const auto& entry : it->second) {
    if (entry.items.size() > items.size() &&
        std::includes(entry.items.begin(), entry.items.end(), items.begin(), items.end())) {
      return true;
    }
  }
  return false;
}

std::vector<Itemset> TopKList::results() const {
  std::vector<Itemset> out;
  out.reserve(count_);
  for (const auto& [support, bucket] : buckets_) out.insert(out.end(), bucket.begin(), bucket.end());
  std::sort(out.begin(), out.end(), [](const Itemset& a, const Itemset& b) {
    if (a.support != b.support) return a.support > b.support;
    if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
    return a.items < b.items;
  });
  return out;
}

namespace {

template <BitWord Word>
class TopKRun {
 public:
  TopKRun(const DensityRemap& remap, const TopKConfig& cfg, TopKList& list, MiningCounters& counters)
      : cfg_(cfg),
        original_(remap.original_id),
        list_(list),
        counters_(counters),
        matrix_(remap.dataset, cfg.bits_per_region == 0 ? kWordBits<Word> : cfg.bits_per_region),
        pairs_(cfg.pair_prune ? build_pair_table(matrix_) : PairSupportTable{}),
        expander_(matrix_, cfg.pair_prune ? &pairs_ : nullptr,
                  ExpanderOptions{cfg.order, cfg.pair_prune, cfg.fused},
                  cfg.arena_capacity != 0 ? cfg.arena_capacity
                                          : default_arena_capacity(remap.dataset.num_transactions()),
                  counters) {
    expander_.set_observer(detail::translate_observer(cfg.observer, original_));
  }

  void run() {
    SearchNode<Word> root = expander_.make_root();
    for (std::size_t pos = 0; pos < root.tail.size(); ++pos) {
      if (root.tail[pos].support < bound()) continue;
      SearchNode<Word> child = expander_.expand(root, pos);
      mine(child);
    }
  }

 private:
  Support bound() const { return std::max<Support>(list_.threshold(), 1); }

  void mine(SearchNode<Word>& node) {
    detail::ArenaScope<Word> scope(expander_.arena());
    expander_.count_tail(node, bound(), true);
    for (std::size_t pos = 0; pos < node.tail.size(); ++pos) {
      if (node.tail[pos].support < bound()) continue;
      SearchNode<Word> child = expander_.expand(node, pos);
      mine(child);
    }
    // Post-order: supersets below this node were offered first.
    if (node.depth() < cfg_.min_length || node.support < bound()) return;
    ++counters_.closedness_checks;
    auto items = detail::to_original(node.head, original_);
    if (cfg_.list_prefilter && list_.has_superset_with_support(items, node.support)) {
      ++counters_.closedness_prefilter_hits;
      return;
    }
    if (is_closed(node, expander_, cfg_.pair_prune ? &pairs_ : nullptr)) {
      list_.offer(Itemset{std::move(items), node.support});
    }
  }

  const TopKConfig& cfg_;
  const std::vector<ItemId>& original_;
  TopKList& list_;
  MiningCounters& counters_;
  BitMatrix<Word> matrix_;
  PairSupportTable pairs_;
  Expander<Word> expander_;
};

}  // namespace

TopKResult mine_topk(const TransactionDataset& ds, const TopKConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("K must be >= 1");
  if (cfg.min_length < 1) throw std::invalid_argument("min_l must be >= 1");
  detail::check_word_width(cfg.word_width);

  TopKResult result;
  TopKList list(cfg.k);
  const DensityRemap remap = remap_for_density(ds, 1);
  if (cfg.word_width == 32) {
    TopKRun<std::uint32_t>(remap, cfg, list, result.counters).run();
  } else {
    TopKRun<std::uint64_t>(remap, cfg, list, result.counters).run();
  }
  result.itemsets = list.results();
  result.final_threshold = list.threshold();
  result.threshold_log = list.threshold_log();
  return result;
}

}  // namespace bitminer
