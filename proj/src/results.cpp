#include "bitminer/results.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace bitminer {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <class T>
std::string join(const std::vector<T>& xs, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

}  // namespace

std::string format_itemset(const TransactionDataset& ds, const Itemset& x) {
  std::ostringstream os;
  for (ItemId i : x.items) os << ds.label(i) << ' ';
  os << "(#" << x.support << ')';
  return os.str();
}

std::uint64_t result_digest(const TransactionDataset& ds, std::span<const Itemset> itemsets) {
  std::uint64_t digest = 0;
  for (const auto& x : itemsets) {
    std::vector<ItemLabel> labels;
    for (ItemId i : x.items) labels.push_back(ds.label(i));
    std::sort(labels.begin(), labels.end());
    std::uint64_t h = mix(x.support);
    for (ItemLabel l : labels) h = mix(h ^ l);
    digest += h;
  }
  return digest;
}

std::vector<Itemset> flatten(const std::vector<std::vector<Itemset>>& by_length) {
  std::vector<Itemset> out;
  for (const auto& level : by_length) out.insert(out.end(), level.begin(), level.end());
  return out;
}

void write_report(std::ostream& out, const RunReport& r) {
  const auto& c = r.counters;
  out << "algorithm=" << r.algorithm << '\n';
  for (const auto& [k, v] : r.config) out << "config." << k << '=' << v << '\n';
  out << "wall_seconds=" << std::fixed << std::setprecision(6) << r.wall_seconds << '\n'
      << std::defaultfloat;
  out << "nodes_expanded=" << c.nodes_expanded << '\n'
      << "and_passes=" << c.and_passes << '\n'
      << "and_word_ops=" << c.and_word_ops << '\n'
      << "skipped_words=" << c.skipped_words << '\n'
      << "fused_passes=" << c.fused_passes << '\n'
      << "second_pass_projections=" << c.second_pass_projections << '\n'
      << "arena_fallbacks=" << c.arena_fallbacks << '\n'
      << "pair_prune_hits=" << c.pair_prune_hits << '\n'
      << "expansions=" << c.expansions << '\n'
      << "extension_passes=" << c.extension_passes << '\n'
      << "closedness_checks=" << c.closedness_checks << '\n'
      << "closedness_prefilter_hits=" << c.closedness_prefilter_hits << '\n'
      << "arena_high_water=" << c.arena_high_water << '\n'
      << "thresholds=" << join(r.thresholds, ',') << '\n'
      << "results_per_length=" << join(r.results_per_length, ',') << '\n'
      << "digest=" << std::hex << std::setw(16) << std::setfill('0') << r.digest << std::dec
      << std::setfill(' ') << '\n';
}

void write_csv_header(std::ostream& out) {
  out << kCsvSchema << '\n'
      << "algorithm,n_or_k,kmax_or_minl,order,pair_prune,fused,word_width,wall_seconds,"
         "nodes_expanded,and_passes,and_word_ops,skipped_words,fused_passes,"
         "second_pass_projections,arena_fallbacks,pair_prune_hits,expansions,extension_passes,"
         "closedness_checks,closedness_prefilter_hits,arena_high_water,results,thresholds,digest\n";
}

void write_csv_row(std::ostream& out, const RunReport& r) {
  auto cfg = [&](const char* key) -> std::string {
    for (const auto& [k, v] : r.config) {
      if (k == key) return v;
    }
    return "";
  };
  const bool nmost = r.algorithm == "nmost";
  const auto& c = r.counters;
  std::size_t total = 0;
  for (auto n : r.results_per_length) total += n;
  out << r.algorithm << ',' << cfg(nmost ? "n" : "k") << ',' << cfg(nmost ? "kmax" : "minl") << ','
      << cfg("order") << ',' << cfg("pair_prune") << ',' << cfg("fused") << ',' << cfg("word_width")
      << ',' << std::fixed << std::setprecision(6) << r.wall_seconds << std::defaultfloat << ','
      << c.nodes_expanded << ',' << c.and_passes << ',' << c.and_word_ops << ',' << c.skipped_words
      << ',' << c.fused_passes << ',' << c.second_pass_projections << ',' << c.arena_fallbacks << ','
      << c.pair_prune_hits << ',' << c.expansions << ',' << c.extension_passes << ','
      << c.closedness_checks << ',' << c.closedness_prefilter_hits << ',' << c.arena_high_water
      << ',' << total << ',' << join(r.thresholds, ';') << ',' << std::hex << std::setw(16)
      << std::setfill('0') << r.digest << std::dec << std::setfill(' ') << '\n';
}

}  // namespace bitminer
