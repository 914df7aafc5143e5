#include "bitminer/nmost.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "run_common.hpp"

namespace bitminer {

void ThresholdVector::raise(std::size_t k, Support value) {
  Support& slot = xi_k_.at(k - 1);
  if (value < slot) throw std::logic_error("threshold may not decrease");
  if (value == slot) return;
  slot = value;
  log_.push_back({k, value});
  const Support global = *std::min_element(xi_k_.begin(), xi_k_.end());
  if (global != xi_) {
    xi_ = global;
    log_.push_back({0, global});
  }
}

Support effective_bound(std::size_t depth, const ThresholdVector& tv) {
  if (depth >= tv.kmax()) throw std::out_of_range("effective_bound: depth must be < kmax");
  const auto& xs = tv.per_length();
  return *std::min_element(xs.begin() + static_cast<std::ptrdiff_t>(depth), xs.end());
}

void TopNCollector::offer(Itemset itemset) {
  const std::size_t k = itemset.items.size();
  auto& level = levels_.at(k - 1);
  const Support s = itemset.support;
  level.buckets[s].push_back(std::move(itemset));
  ++level.count;
  if (level.count < n_) return;
  std::size_t kept = 0;
  auto it = level.buckets.begin();
  for (;; ++it) {
    kept += it->second.size();
    if (kept >= n_) break;
  }
  const Support nth = it->first;
  level.buckets.erase(std::next(it), level.buckets.end());
  level.count = kept;
  thresholds_.raise(k, nth);
}

std::vector<Itemset> TopNCollector::results(std::size_t k) const {
  std::vector<Itemset> out;
  for (const auto& [support, bucket] : levels_.at(k - 1).buckets) {
    auto first = out.size();
    out.insert(out.end(), bucket.begin(), bucket.end());
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
              [](const Itemset& a, const Itemset& b) { return a.items < b.items; });
  }
  return out;
}

std::size_t NMostResult::total() const {
  std::size_t n = 0;
  for (const auto& level : by_length) n += level.size();
  return n;
}

namespace {

template <BitWord Word>
class NMostRun {
 public:
  NMostRun(const DensityRemap& remap, const NMostConfig& cfg, TopNCollector& collector,
           MiningCounters& counters)
      : cfg_(cfg),
        original_(remap.original_id),
        collector_(collector),
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
    for (std::size_t pos = 0; pos + 1 < root.tail.size(); ++pos) {
      if (root.tail[pos].support < bound_below(1)) continue;
      SearchNode<Word> child = expander_.expand(root, pos);
      mine(child);
    }
  }

 private:
  Support bound_below(std::size_t depth) const {
    return std::max<Support>(effective_bound(depth, collector_.thresholds()), 1);
  }

  void mine(SearchNode<Word>& node) {
    detail::ArenaScope<Word> scope(expander_.arena());
    const std::size_t d = node.depth();
    const std::size_t k = d + 1;
    expander_.count_tail(node, bound_below(d), k < cfg_.kmax);
    for (std::size_t pos = 0; pos < node.tail.size(); ++pos) {
      const auto& e = node.tail[pos];
      if (e.support >= std::max<Support>(collector_.thresholds().at(k), 1)) {
        std::vector<ItemId> items = node.head;
        items.push_back(e.item);
        collector_.offer(Itemset{detail::to_original(items, original_), e.support});
      }
      if (k < cfg_.kmax && pos + 1 < node.tail.size() && e.support >= bound_below(k)) {
        SearchNode<Word> child = expander_.expand(node, pos);
        mine(child);
      }
    }
  }

  const NMostConfig& cfg_;
  const std::vector<ItemId>& original_;
  TopNCollector& collector_;
  BitMatrix<Word> matrix_;
  PairSupportTable pairs_;
  Expander<Word> expander_;
};

}  // namespace

NMostResult mine_nmost(const TransactionDataset& ds, const NMostConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("N must be >= 1");
  if (cfg.kmax < 1) throw std::invalid_argument("kmax must be >= 1");
  detail::check_word_width(cfg.word_width);

  NMostResult result;
  TopNCollector collector(cfg.n, cfg.kmax);

  // Single items come straight from the horizontal counts; this raises xi_1
  // before any bit-vector is built.
  const auto supports = item_supports(ds);
  for (ItemId i = 0; i < supports.size(); ++i) {
    if (supports[i] > 0 && supports[i] >= collector.thresholds().at(1)) {
      collector.offer(Itemset{{i}, supports[i]});
    }
  }

  if (cfg.kmax >= 2) {
    const Support floor =
        cfg.density_remap ? std::max<Support>(effective_bound(0, collector.thresholds()), 1) : 0;
    const DensityRemap remap = remap_for_density(ds, floor);
    if (cfg.word_width == 32) {
      NMostRun<std::uint32_t>(remap, cfg, collector, result.counters).run();
    } else {
      NMostRun<std::uint64_t>(remap, cfg, collector, result.counters).run();
    }
  }

  for (std::size_t k = 1; k <= cfg.kmax; ++k) result.by_length.push_back(collector.results(k));
  result.final_thresholds = collector.thresholds().per_length();
  result.threshold_log = collector.thresholds().log();
  return result;
}

}  // namespace bitminer
