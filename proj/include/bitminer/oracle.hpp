#pragma once

// Brute-force reference results for small datasets. Nothing here touches the
// bit-vector machinery or thresholds.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "bitminer/dataset.hpp"
#include "bitminer/types.hpp"

namespace bitminer::oracle {

inline constexpr std::size_t kMaxItems = 20;

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Support of every itemset (sorted ids) of length <= kmax that occurs in at
/// least one transaction.
using SupportMap = std::map<std::vector<ItemId>, Support>;

SupportMap enumerate_supports(const TransactionDataset& ds, std::size_t kmax);

/// Index k-1 holds the k-itemsets, support descending then items ascending.
std::vector<std::vector<Itemset>> nmost(const TransactionDataset& ds, std::size_t n, std::size_t kmax);

/// Every closed itemset, support descending, length ascending, items ascending.
std::vector<Itemset> closed(const TransactionDataset& ds);

std::vector<Itemset> topk(const TransactionDataset& ds, std::size_t k, std::size_t min_length);

/// Direct scan: true iff `x.support` is the itemset's support and no single
/// extension keeps that support.
bool audit_closed(const TransactionDataset& ds, const Itemset& x);

}  // namespace bitminer::oracle
