#include "bitminer/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bitminer {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

TransactionDataset::TransactionDataset(std::vector<Transaction> transactions,
                                       std::vector<ItemLabel> labels)
    : labels_(std::move(labels)) {
  by_label_.reserve(labels_.size());
  for (ItemId id = 0; id < labels_.size(); ++id) {
    if (!by_label_.emplace(labels_[id], id).second) {
      throw std::invalid_argument("duplicate item label " + std::to_string(labels_[id]));
    }
  }
  transactions_.reserve(transactions.size());
  for (auto& t : transactions) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (t.empty()) continue;
    if (t.back() >= labels_.size()) {
      throw std::invalid_argument("item id " + std::to_string(t.back()) + " out of range");
    }
    transactions_.push_back(std::move(t));
  }
}

std::optional<ItemId> TransactionDataset::find(ItemLabel label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::size_t TransactionDataset::total_length() const {
  std::size_t n = 0;
  for (const auto& t : transactions_) n += t.size();
  return n;
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

TransactionDataset parse_fimi(std::istream& in) {
  std::vector<Transaction> transactions;
  std::vector<ItemLabel> labels;
  std::unordered_map<ItemLabel, ItemId> ids;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    Transaction t;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
      if (is_blank(*p)) {
        ++p;
        continue;
      }
      const char* tok_end = p;
      while (tok_end != end && !is_blank(*tok_end)) ++tok_end;
      std::string_view tok(p, static_cast<std::size_t>(tok_end - p));
      if (tok.front() == '-') {
        throw ParseError(line_no, "negative item '" + std::string(tok) + "'");
      }
      ItemLabel value = 0;
      auto [ptr, ec] = std::from_chars(p, tok_end, value);
      if (ec == std::errc::result_out_of_range) {
        throw ParseError(line_no, "item '" + std::string(tok) + "' out of range");
      }
      if (ec != std::errc() || ptr != tok_end) {
        throw ParseError(line_no, "not an item '" + std::string(tok) + "'");
      }
      auto [it, inserted] = ids.emplace(value, static_cast<ItemId>(labels.size()));
      if (inserted) labels.push_back(value);
      t.push_back(it->second);
      p = tok_end;
    }
    if (!t.empty()) transactions.push_back(std::move(t));
  }
  return TransactionDataset(std::move(transactions), std::move(labels));
}

TransactionDataset parse_fimi(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_fimi(in);
}

TransactionDataset load_fimi(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_fimi(in);
}

void write_fimi(std::ostream& out, const TransactionDataset& ds) {
  for (const auto& t : ds.transactions()) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out << ' ';
      out << ds.label(t[i]);
    }
    out << '\n';
  }
}

std::vector<Support> item_supports(const TransactionDataset& ds) {
  std::vector<Support> support(ds.num_items(), 0);
  for (const auto& t : ds.transactions()) {
    for (ItemId i : t) ++support[i];
  }
  return support;
}

DensityRemap remap_for_density(const TransactionDataset& ds, Support floor) {
  const auto support = item_supports(ds);
  constexpr ItemId kDropped = ~ItemId{0};
  std::vector<ItemId> new_id(ds.num_items(), kDropped);
  DensityRemap out;
  std::vector<ItemLabel> labels;
  for (ItemId i = 0; i < ds.num_items(); ++i) {
    if (support[i] >= floor) {
      new_id[i] = static_cast<ItemId>(out.original_id.size());
      out.original_id.push_back(i);
      labels.push_back(ds.label(i));
    }
  }
  std::vector<Transaction> transactions;
  transactions.reserve(ds.num_transactions());
  for (const auto& t : ds.transactions()) {
    Transaction kept;
    kept.reserve(t.size());
    for (ItemId i : t) {
      if (new_id[i] != kDropped) kept.push_back(new_id[i]);
    }
    if (!kept.empty()) transactions.push_back(std::move(kept));
  }
  out.dataset = TransactionDataset(std::move(transactions), std::move(labels));
  return out;
}

}  // namespace bitminer
