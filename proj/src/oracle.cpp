#include "bitminer/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace bitminer::oracle {

namespace {

using Mask = std::uint32_t;

void guard(const TransactionDataset& ds) {
  if (ds.num_items() > kMaxItems) {
    throw GuardError("oracle refuses datasets with more than " + std::to_string(kMaxItems) +
                     " items (got " + std::to_string(ds.num_items()) + ")");
  }
}

std::vector<ItemId> items_of(Mask m) {
  std::vector<ItemId> out;
  for (ItemId i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1U) out.push_back(i);
  }
  return out;
}

/// counts[m] = number of transactions containing itemset m, built by adding
/// every nonempty subset of every transaction.
std::vector<Support> subset_counts(const TransactionDataset& ds) {
  guard(ds);
  std::vector<Support> counts(std::size_t{1} << ds.num_items(), 0);
  for (const auto& t : ds.transactions()) {
    Mask tm = 0;
    for (ItemId i : t) tm |= Mask{1} << i;
    for (Mask s = tm; s != 0; s = (s - 1) & tm) ++counts[s];
  }
  return counts;
}

bool by_support_then_items(const Itemset& a, const Itemset& b) {
  if (a.support != b.support) return a.support > b.support;
  return a.items < b.items;
}

bool by_support_length_items(const Itemset& a, const Itemset& b) {
  if (a.support != b.support) return a.support > b.support;
  if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
  return a.items < b.items;
}

/// Keeps every entry whose support reaches the n-th largest. `sorted` must be
/// support-descending.
std::vector<Itemset> cut_at_nth(std::vector<Itemset> sorted, std::size_t n) {
  if (sorted.size() <= n) return sorted;
  const Support s = sorted[n - 1].support;
  auto end = std::find_if(sorted.begin(), sorted.end(), [s](const Itemset& x) { return x.support < s; });
  sorted.erase(end, sorted.end());
  return sorted;
}

}  // namespace

SupportMap enumerate_supports(const TransactionDataset& ds, std::size_t kmax) {
  const auto counts = subset_counts(ds);
  SupportMap out;
  for (Mask m = 1; m < counts.size(); ++m) {
    if (counts[m] > 0 && static_cast<std::size_t>(std::popcount(m)) <= kmax) {
      out.emplace(items_of(m), counts[m]);
    }
  }
  return out;
}

std::vector<std::vector<Itemset>> nmost(const TransactionDataset& ds, std::size_t n, std::size_t kmax) {
  const auto counts = subset_counts(ds);
  std::vector<std::vector<Itemset>> by_length(kmax);
  for (Mask m = 1; m < counts.size(); ++m) {
    const auto k = static_cast<std::size_t>(std::popcount(m));
    if (counts[m] > 0 && k <= kmax) by_length[k - 1].push_back(Itemset{items_of(m), counts[m]});
  }
  for (auto& level : by_length) {
    std::sort(level.begin(), level.end(), by_support_then_items);
    level = cut_at_nth(std::move(level), n);
  }
  return by_length;
}

std::vector<Itemset> closed(const TransactionDataset& ds) {
  const auto counts = subset_counts(ds);
  const std::size_t n = ds.num_items();
  std::vector<Itemset> out;
  for (Mask m = 1; m < counts.size(); ++m) {
    if (counts[m] == 0) continue;
    bool is_closed = true;
    for (std::size_t i = 0; i < n && is_closed; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(m & bit) && counts[m | bit] == counts[m]) is_closed = false;
    }
    if (is_closed) out.push_back(Itemset{items_of(m), counts[m]});
  }
  std::sort(out.begin(), out.end(), by_support_length_items);
  return out;
}

std::vector<Itemset> topk(const TransactionDataset& ds, std::size_t k, std::size_t min_length) {
  auto all = closed(ds);
  std::erase_if(all, [min_length](const Itemset& x) { return x.items.size() < min_length; });
  return cut_at_nth(std::move(all), k);
}

bool audit_closed(const TransactionDataset& ds, const Itemset& x) {
  auto contains = [&](const Transaction& t, ItemId extra, bool use_extra) {
    if (use_extra && !std::binary_search(t.begin(), t.end(), extra)) return false;
    return std::includes(t.begin(), t.end(), x.items.begin(), x.items.end());
  };
  Support s = 0;
  for (const auto& t : ds.transactions()) s += contains(t, 0, false) ? 1 : 0;
  if (s != x.support || s == 0) return false;
  for (ItemId i = 0; i < ds.num_items(); ++i) {
    if (std::binary_search(x.items.begin(), x.items.end(), i)) continue;
    Support si = 0;
    for (const auto& t : ds.transactions()) si += contains(t, i, true) ? 1 : 0;
    if (si == s) return false;
  }
  return true;
}

}  // namespace bitminer::oracle
