#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "bitminer/dataset.hpp"

namespace bitminer {

namespace {

std::vector<ItemLabel> sequential_labels(std::size_t n) {
  std::vector<ItemLabel> labels(n);
  std::iota(labels.begin(), labels.end(), ItemLabel{1});
  return labels;
}

}  // namespace

TransactionDataset generate_synthetic(std::size_t num_items, std::size_t num_transactions,
                                      double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pick(std::clamp(density, 0.0, 1.0));
  std::vector<Transaction> transactions(num_transactions);
  for (auto& t : transactions) {
    for (ItemId i = 0; i < num_items; ++i) {
      if (pick(rng)) t.push_back(i);
    }
  }
  return TransactionDataset(std::move(transactions), sequential_labels(num_items));
}

TransactionDataset generate_quest(const QuestParams& params, std::uint64_t seed) {
  const std::size_t n_items = params.num_items;
  if (n_items == 0 || params.num_transactions == 0 || params.num_patterns == 0) {
    return TransactionDataset({}, sequential_labels(n_items));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ItemId> any_item(0, static_cast<ItemId>(n_items - 1));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  struct Pattern {
    std::vector<ItemId> items;
    double corruption = 0.0;
  };
  std::vector<Pattern> patterns(params.num_patterns);
  std::vector<double> weights(params.num_patterns);
  {
    std::poisson_distribution<int> pattern_len(std::max(params.avg_pattern_length - 1.0, 0.0));
    std::exponential_distribution<double> carry(1.0 / std::max(params.correlation, 1e-9));
    std::exponential_distribution<double> weight(1.0);
    std::normal_distribution<double> corruption(params.corruption_mean, 0.1);
    const std::vector<ItemId>* previous = nullptr;
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      auto& pat = patterns[p];
      const auto len = std::min<std::size_t>(static_cast<std::size_t>(pattern_len(rng)) + 1, n_items);
      if (previous != nullptr && !previous->empty()) {
        auto from_prev = std::min<std::size_t>(
            static_cast<std::size_t>(std::lround(std::min(carry(rng), 1.0) * static_cast<double>(len))),
            previous->size());
        std::vector<ItemId> shuffled = *previous;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        pat.items.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(from_prev));
      }
      while (pat.items.size() < len) {
        ItemId candidate = any_item(rng);
        if (std::find(pat.items.begin(), pat.items.end(), candidate) == pat.items.end()) {
          pat.items.push_back(candidate);
        }
      }
      pat.corruption = std::clamp(corruption(rng), 0.0, 1.0);
      weights[p] = weight(rng);
      previous = &pat.items;
    }
  }
  std::discrete_distribution<std::size_t> choose(weights.begin(), weights.end());
  std::poisson_distribution<int> txn_len(std::max(params.avg_transaction_length - 1.0, 0.0));

  std::vector<Transaction> transactions(params.num_transactions);
  std::vector<ItemId> carried;
  for (auto& t : transactions) {
    const std::size_t target = static_cast<std::size_t>(txn_len(rng)) + 1;
    if (!carried.empty()) {
      t = std::move(carried);
      carried.clear();
    }
    std::size_t attempts = 0;
    while (t.size() < target && attempts++ < 64) {
      const auto& pat = patterns[choose(rng)];
      std::vector<ItemId> picked = pat.items;
      while (!picked.empty() && unit(rng) < pat.corruption) {
        picked.erase(picked.begin() + static_cast<std::ptrdiff_t>(
                                          std::uniform_int_distribution<std::size_t>(0, picked.size() - 1)(rng)));
      }
      if (t.size() + picked.size() > target && !t.empty() && unit(rng) < 0.5) {
        carried = std::move(picked);
        break;
      }
      t.insert(t.end(), picked.begin(), picked.end());
    }
  }
  return TransactionDataset(std::move(transactions), sequential_labels(n_items));
}

}  // namespace bitminer
