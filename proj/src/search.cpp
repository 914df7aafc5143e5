#include "bitminer/search.hpp"

namespace bitminer {

void order_tail(std::vector<TailSupport>& tail, TailOrder order) {
  std::sort(tail.begin(), tail.end(), [](const auto& a, const auto& b) { return a.item < b.item; });
  switch (order) {
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

bool pair_prune(std::span<const ItemId> head, ItemId x, const PairSupportTable& table, Support bound) {
  for (ItemId a : head) {
    if (table.get(a, x) < bound) return true;
  }
  return false;
}

}  // namespace bitminer
