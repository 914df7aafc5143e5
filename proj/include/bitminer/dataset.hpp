#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bitminer/types.hpp"

namespace bitminer {

/// Sorted, duplicate-free list of item ids.
using Transaction = std::vector<ItemId>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Memory-resident horizontal transaction store. Immutable after construction.
class TransactionDataset {
 public:
  TransactionDataset() = default;

  /// Takes ownership of the transactions and the id -> label table. Each
  /// transaction is sorted and deduplicated; empty transactions are dropped.
  /// Throws std::invalid_argument if an id is out of range or labels repeat.
  TransactionDataset(std::vector<Transaction> transactions,
                     std::vector<ItemLabel> labels);

  std::span<const Transaction> transactions() const { return transactions_; }
  const Transaction& transaction(std::size_t t) const { return transactions_[t]; }
  std::size_t num_transactions() const { return transactions_.size(); }
  std::size_t num_items() const { return labels_.size(); }

  std::span<const ItemLabel> labels() const { return labels_; }
  ItemLabel label(ItemId id) const { return labels_[id]; }
  std::optional<ItemId> find(ItemLabel label) const;

  std::size_t total_length() const;

 private:
  std::vector<Transaction> transactions_;
  std::vector<ItemLabel> labels_;
  std::unordered_map<ItemLabel, ItemId> by_label_;
};

/// Reads the FIMI flat format: one transaction per line, whitespace separated
/// decimal tokens. Blank lines are skipped; ids follow first appearance.
TransactionDataset parse_fimi(std::istream& in);
TransactionDataset parse_fimi(std::string_view text);
TransactionDataset load_fimi(const std::string& path);

/// Writes one line per transaction using the original labels.
void write_fimi(std::ostream& out, const TransactionDataset& ds);

std::vector<Support> item_supports(const TransactionDataset& ds);

/// Result of dropping infrequent items. `original_id[new_id]` is the id the
/// item had in the input dataset.
struct DensityRemap {
  TransactionDataset dataset;
  std::vector<ItemId> original_id;
};

/// Removes items with support < floor, drops emptied transactions and
/// re-densifies the remaining ids (relative order preserved).
DensityRemap remap_for_density(const TransactionDataset& ds, Support floor);

/// Each (transaction, item) pair is included independently with probability
/// `density`. Labels are 1..num_items. Deterministic for a given seed.
TransactionDataset generate_synthetic(std::size_t num_items,
                                      std::size_t num_transactions,
                                      double density, std::uint64_t seed);

/// Parameters of the classic market-basket generator (T<avg>I<pattern>D<n>).
struct QuestParams {
  std::size_t num_items = 1000;
  std::size_t num_transactions = 100000;
  double avg_transaction_length = 10.0;
  double avg_pattern_length = 4.0;
  std::size_t num_patterns = 2000;
  double correlation = 0.5;
  double corruption_mean = 0.5;
};

/// Transactions are assembled from a pool of weighted, partially corrupted
/// potential patterns, so long itemsets recur with non-trivial support.
TransactionDataset generate_quest(const QuestParams& params, std::uint64_t seed);

}  // namespace bitminer
