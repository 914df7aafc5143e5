#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bitminer/counters.hpp"
#include "bitminer/dataset.hpp"
#include "bitminer/types.hpp"

namespace bitminer {

/// "label1 label2 ... (#support)", labels in item-id order.
std::string format_itemset(const TransactionDataset& ds, const Itemset& x);

/// Order-independent digest of (label set, support) pairs.
std::uint64_t result_digest(const TransactionDataset& ds, std::span<const Itemset> itemsets);

/// Flattens per-length results, keeping their order.
std::vector<Itemset> flatten(const std::vector<std::vector<Itemset>>& by_length);

/// Summary of one miner invocation, written next to (never into) the result
/// listing.
struct RunReport {
  std::string algorithm;
  std::vector<std::pair<std::string, std::string>> config;
  double wall_seconds = 0.0;
  MiningCounters counters;
  std::vector<Support> thresholds;  // xi_k per length, or the single xi
  std::vector<std::size_t> results_per_length;
  std::uint64_t digest = 0;
};

void write_report(std::ostream& out, const RunReport& report);

inline constexpr const char* kCsvSchema = "# bitminer-bench v1";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const RunReport& report);

}  // namespace bitminer
