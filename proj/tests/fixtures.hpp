#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "bitminer/dataset.hpp"
#include "bitminer/types.hpp"

namespace bitminer::test {

// Items of the sample dataset, written with their file labels.
inline constexpr ItemLabel A = 1, B = 2, C = 3, D = 4, I = 5;

inline const char* kSample = "1 2 3\n1 2 5\n2\n3 5\n1 2 4\n1 2 3 4\n1\n";

inline TransactionDataset sample() { return parse_fimi(std::string_view(kSample)); }

inline ItemId id(const TransactionDataset& ds, ItemLabel l) { return *ds.find(l); }

inline std::vector<ItemId> ids(const TransactionDataset& ds, std::initializer_list<ItemLabel> labels) {
  std::vector<ItemId> out;
  for (auto l : labels) out.push_back(id(ds, l));
  std::sort(out.begin(), out.end());
  return out;
}

inline Itemset set_of(const TransactionDataset& ds, std::initializer_list<ItemLabel> labels, Support s) {
  return Itemset{ids(ds, labels), s};
}

/// Small random instance within the oracle's reach.
struct CorpusCase {
  TransactionDataset ds;
  std::size_t items = 0;
  std::size_t transactions = 0;
  double density = 0.0;
  std::uint64_t seed = 0;
};

inline CorpusCase corpus_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 7919 + 17);
  CorpusCase c;
  c.items = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
  c.transactions = std::uniform_int_distribution<std::size_t>(1, 64)(rng);
  c.density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  c.seed = seed;
  c.ds = generate_synthetic(c.items, c.transactions, c.density, seed);
  return c;
}

}  // namespace bitminer::test
