#pragma once

// Vertical bit-vectors and the word-level kernels that walk them.
//
// A node of the search tree stores its head bit-vector in compact form: only
// the nonzero words are kept, and `pbr[i]` names the word index that
// `words[i]` came from. Item rows are stored full length.

#include <algorithm>
#include <bit>
#include <cassert>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bitminer/counters.hpp"
#include "bitminer/dataset.hpp"
#include "bitminer/types.hpp"

namespace bitminer {

template <class Word>
concept BitWord = std::same_as<Word, std::uint32_t> || std::same_as<Word, std::uint64_t>;

template <BitWord Word>
inline constexpr unsigned kWordBits = sizeof(Word) * 8;

/// One row per item. Transaction t lives in word t / bits_per_region at bit
/// t % bits_per_region; bits_per_region < word width is a test layout used to
/// reproduce worked examples with one transaction per region.
template <BitWord Word>
class BitMatrix {
 public:
  BitMatrix() = default;

  explicit BitMatrix(const TransactionDataset& ds, unsigned bits_per_region = kWordBits<Word>)
      : num_items_(ds.num_items()),
        num_transactions_(ds.num_transactions()),
        bits_per_region_(bits_per_region) {
    if (bits_per_region == 0 || bits_per_region > kWordBits<Word>) {
      throw std::invalid_argument("bits_per_region must be in [1, word width]");
    }
    num_words_ = (num_transactions_ + bits_per_region_ - 1) / bits_per_region_;
    words_.assign(num_items_ * num_words_, Word{0});
    for (std::size_t t = 0; t < num_transactions_; ++t) {
      const std::size_t w = t / bits_per_region_;
      const Word bit = Word{1} << (t % bits_per_region_);
      for (ItemId i : ds.transaction(t)) words_[i * num_words_ + w] |= bit;
    }
  }

  std::span<const Word> row(ItemId item) const {
    return std::span<const Word>(words_).subspan(item * num_words_, num_words_);
  }

  Support support(ItemId item) const {
    Support s = 0;
    for (Word w : row(item)) s += static_cast<Support>(std::popcount(w));
    return s;
  }

  bool test(ItemId item, std::size_t transaction) const {
    return (row(item)[transaction / bits_per_region_] >> (transaction % bits_per_region_)) & Word{1};
  }

  std::size_t num_items() const { return num_items_; }
  std::size_t num_transactions() const { return num_transactions_; }
  std::size_t num_words() const { return num_words_; }
  unsigned bits_per_region() const { return bits_per_region_; }

 private:
  std::size_t num_items_ = 0;
  std::size_t num_transactions_ = 0;
  unsigned bits_per_region_ = kWordBits<Word>;
  std::size_t num_words_ = 0;
  std::vector<Word> words_;
};

/// Indexes of the nonzero words of a row.
template <BitWord Word>
std::vector<RegionIndex> root_pbr(std::span<const Word> row) {
  std::vector<RegionIndex> pbr;
  for (std::size_t w = 0; w < row.size(); ++w) {
    if (row[w] != 0) pbr.push_back(static_cast<RegionIndex>(w));
  }
  return pbr;
}

/// Picks row[pbr[i]] for each i, producing a compact head.
template <BitWord Word>
std::vector<Word> gather(std::span<const Word> row, std::span<const RegionIndex> pbr) {
  std::vector<Word> out;
  out.reserve(pbr.size());
  for (RegionIndex r : pbr) out.push_back(row[r]);
  return out;
}

/// Support of head ∪ {item}: sum over regions of popcount(head ∧ item).
template <BitWord Word>
Support count_and(std::span<const Word> head, std::span<const Word> item,
                  std::span<const RegionIndex> pbr) {
  assert(head.size() == pbr.size());
  Support s = 0;
  for (std::size_t i = 0; i < pbr.size(); ++i) {
    s += static_cast<Support>(std::popcount(static_cast<Word>(head[i] & item[pbr[i]])));
  }
  return s;
}

template <BitWord Word>
struct Projection {
  std::span<const Word> words;
  std::span<const RegionIndex> pbr;
  Support support = 0;
};

/// Single fused pass: counts head ∧ item and writes every nonzero result word
/// with its region index. `out_words`/`out_pbr` need room for pbr.size()
/// entries. Returns the number written and the support.
template <BitWord Word>
std::pair<std::size_t, Support> project_into(std::span<const Word> head, std::span<const Word> item,
                                             std::span<const RegionIndex> pbr,
                                             std::span<Word> out_words,
                                             std::span<RegionIndex> out_pbr) {
  assert(head.size() == pbr.size());
  assert(out_words.size() >= pbr.size() && out_pbr.size() >= pbr.size());
  std::size_t n = 0;
  Support s = 0;
  for (std::size_t i = 0; i < pbr.size(); ++i) {
    const Word r = head[i] & item[pbr[i]];
    if (r != 0) {
      out_words[n] = r;
      out_pbr[n] = pbr[i];
      ++n;
      s += static_cast<Support>(std::popcount(r));
    }
  }
  return {n, s};
}

/// Two preallocated heaps (result words and region indexes) used as a stack
/// that follows the depth-first recursion.
template <BitWord Word>
class NodeArena {
 public:
  struct Mark {
    std::size_t top = 0;
  };

  explicit NodeArena(std::size_t capacity) : words_(capacity), pbr_(capacity) {}

  std::size_t capacity() const { return words_.size(); }
  std::size_t used() const { return top_; }
  std::size_t high_water() const { return high_water_; }
  bool can_fit(std::size_t n) const { return words_.size() - top_ >= n; }

  Mark mark() const { return Mark{top_}; }
  void release(Mark m) {
    assert(m.top <= top_);
    top_ = m.top;
  }

  /// Fused pass into the heaps, or nullopt when a worst-case child (one word
  /// per parent region) would not fit. Nothing is written on nullopt.
  std::optional<Projection<Word>> project(std::span<const Word> head, std::span<const Word> item,
                                          std::span<const RegionIndex> pbr) {
    if (!can_fit(pbr.size())) return std::nullopt;
    auto out_w = std::span<Word>(words_).subspan(top_, pbr.size());
    auto out_p = std::span<RegionIndex>(pbr_).subspan(top_, pbr.size());
    auto [n, s] = project_into<Word>(head, item, pbr, out_w, out_p);
    top_ += n;
    high_water_ = std::max(high_water_, top_);
    return Projection<Word>{out_w.first(n), out_p.first(n), s};
  }

 private:
  std::vector<Word> words_;
  std::vector<RegionIndex> pbr_;
  std::size_t top_ = 0;
  std::size_t high_water_ = 0;
};

/// Default heap size: two slots per transaction. Tiny datasets get a fixed
/// floor, since a wide tail can stack more children than that on one path.
inline constexpr std::size_t kMinArenaCapacity = 4096;

inline std::size_t default_arena_capacity(std::size_t num_transactions) {
  return std::max(2 * num_transactions, kMinArenaCapacity);
}

/// One projection buffer per tree depth, for children built by the second
/// (non-fused) pass. A buffer is reused by consecutive siblings.
template <BitWord Word>
class PathBuffers {
 public:
  Projection<Word> project(std::size_t depth, std::span<const Word> head,
                           std::span<const Word> item, std::span<const RegionIndex> pbr) {
    if (levels_.size() <= depth) levels_.resize(depth + 1);
    auto& level = levels_[depth];
    if (level.words.size() < pbr.size()) {
      level.words.resize(pbr.size());
      level.pbr.resize(pbr.size());
    }
    auto [n, s] = project_into<Word>(head, item, pbr, level.words, level.pbr);
    return Projection<Word>{std::span<const Word>(level.words).first(n),
                            std::span<const RegionIndex>(level.pbr).first(n), s};
  }

 private:
  struct Level {
    std::vector<Word> words;
    std::vector<RegionIndex> pbr;
  };
  std::vector<Level> levels_;
};

}  // namespace bitminer
