#include "bitminer/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "bitminer/dataset.hpp"
#include "bitminer/nmost.hpp"
#include "bitminer/oracle.hpp"
#include "bitminer/results.hpp"
#include "bitminer/topk.hpp"

namespace bitminer::cli {

namespace {

struct Options {
  std::string path;
  std::size_t n = 10;
  std::size_t k = 10;
  std::size_t kmax = 5;
  std::size_t minl = 1;
  std::string order = "dec";
  bool no_pair_prune = false;
  bool no_fused = false;
  unsigned word_width = 64;
  std::uint64_t seed = 1;
  std::string csv;
  // bench
  std::string algo = "nmost";
  std::vector<std::size_t> sweep;
  std::vector<double> gen;
  std::vector<double> quest;
  // verify
  bool corrupt = false;
};

TailOrder parse_order(const std::string& s) { return s == "inc" ? TailOrder::increasing : TailOrder::decreasing; }

std::string on_off(bool b) { return b ? "on" : "off"; }

NMostConfig nmost_config(const Options& o, std::size_t n) {
  NMostConfig cfg;
  cfg.n = n;
  cfg.kmax = o.kmax;
  cfg.order = parse_order(o.order);
  cfg.pair_prune = !o.no_pair_prune;
  cfg.fused = !o.no_fused;
  cfg.word_width = o.word_width;
  return cfg;
}

TopKConfig topk_config(const Options& o, std::size_t k) {
  TopKConfig cfg;
  cfg.k = k;
  cfg.min_length = o.minl;
  cfg.order = parse_order(o.order);
  cfg.pair_prune = !o.no_pair_prune;
  cfg.fused = !o.no_fused;
  cfg.word_width = o.word_width;
  return cfg;
}

void echo_common(RunReport& r, const Options& o) {
  r.config.emplace_back("order", o.order);
  r.config.emplace_back("pair_prune", on_off(!o.no_pair_prune));
  r.config.emplace_back("fused", on_off(!o.no_fused));
  r.config.emplace_back("word_width", std::to_string(o.word_width));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Mined {
  std::vector<Itemset> itemsets;
  RunReport report;
};

Mined run_nmost(const TransactionDataset& ds, const Options& o, std::size_t n) {
  Mined m;
  auto& r = m.report;
  r.algorithm = "nmost";
  r.config.emplace_back("n", std::to_string(n));
  r.config.emplace_back("kmax", std::to_string(o.kmax));
  echo_common(r, o);
  const auto t0 = std::chrono::steady_clock::now();
  auto res = mine_nmost(ds, nmost_config(o, n));
  r.wall_seconds = seconds_since(t0);
  r.counters = res.counters;
  r.thresholds = res.final_thresholds;
  for (const auto& level : res.by_length) r.results_per_length.push_back(level.size());
  m.itemsets = flatten(res.by_length);
  r.digest = result_digest(ds, m.itemsets);
  return m;
}

Mined run_topk(const TransactionDataset& ds, const Options& o, std::size_t k) {
  Mined m;
  auto& r = m.report;
  r.algorithm = "topk";
  r.config.emplace_back("k", std::to_string(k));
  r.config.emplace_back("minl", std::to_string(o.minl));
  echo_common(r, o);
  const auto t0 = std::chrono::steady_clock::now();
  auto res = mine_topk(ds, topk_config(o, k));
  r.wall_seconds = seconds_since(t0);
  r.counters = res.counters;
  r.thresholds = {res.final_threshold};
  std::size_t longest = 0;
  for (const auto& x : res.itemsets) longest = std::max(longest, x.items.size());
  r.results_per_length.assign(longest, 0);
  for (const auto& x : res.itemsets) ++r.results_per_length[x.items.size() - 1];
  m.itemsets = std::move(res.itemsets);
  r.digest = result_digest(ds, m.itemsets);
  return m;
}

void emit_csv(const Options& o, const RunReport& r) {
  if (o.csv.empty()) return;
  std::ofstream f(o.csv);
  if (!f) throw IoError("cannot write '" + o.csv + "'");
  write_csv_header(f);
  write_csv_row(f, r);
}

int cmd_mine(const Options& o, bool nmost, std::ostream& out, std::ostream& err) {
  const auto ds = load_fimi(o.path);
  Mined m = nmost ? run_nmost(ds, o, o.n) : run_topk(ds, o, o.k);
  for (const auto& x : m.itemsets) out << format_itemset(ds, x) << '\n';
  write_report(err, m.report);
  emit_csv(o, m.report);
  return kOk;
}

TransactionDataset bench_dataset(const Options& o) {
  if (!o.gen.empty()) {
    if (o.gen.size() != 3) throw std::invalid_argument("--gen expects ITEMS,TRANSACTIONS,DENSITY");
    return generate_synthetic(static_cast<std::size_t>(o.gen[0]), static_cast<std::size_t>(o.gen[1]),
                              o.gen[2], o.seed);
  }
  if (!o.quest.empty()) {
    if (o.quest.size() != 4) {
      throw std::invalid_argument("--quest expects ITEMS,TRANSACTIONS,AVG_LEN,AVG_PATTERN_LEN");
    }
    QuestParams p;
    p.num_items = static_cast<std::size_t>(o.quest[0]);
    p.num_transactions = static_cast<std::size_t>(o.quest[1]);
    p.avg_transaction_length = o.quest[2];
    p.avg_pattern_length = o.quest[3];
    return generate_quest(p, o.seed);
  }
  if (o.path.empty()) throw std::invalid_argument("bench needs a dataset path, --gen or --quest");
  return load_fimi(o.path);
}

int cmd_bench(const Options& o, std::ostream& out) {
  const auto ds = bench_dataset(o);
  std::unique_ptr<std::ofstream> file;
  std::ostream* csv = &out;
  if (!o.csv.empty()) {
    file = std::make_unique<std::ofstream>(o.csv);
    if (!*file) throw IoError("cannot write '" + o.csv + "'");
    csv = file.get();
  }
  write_csv_header(*csv);
  for (std::size_t value : o.sweep) {
    const Mined m = o.algo == "topk" ? run_topk(ds, o, value) : run_nmost(ds, o, value);
    write_csv_row(*csv, m.report);
  }
  return kOk;
}

/// Prints the first itemset present in only one of the two lists.
bool same_results(const TransactionDataset& ds, const std::vector<Itemset>& mined,
                  const std::vector<Itemset>& expected, std::ostream& out) {
  auto key = [](const Itemset& x) { return std::make_pair(x.items, x.support); };
  std::set<std::pair<std::vector<ItemId>, Support>> a, b;
  for (const auto& x : mined) a.insert(key(x));
  for (const auto& x : expected) b.insert(key(x));
  if (a == b) return true;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end() && *ia == *ib) {
    ++ia;
    ++ib;
  }
  if (ib == b.end() || (ia != a.end() && *ia < *ib)) {
    out << "  first difference: miner only: " << format_itemset(ds, Itemset{ia->first, ia->second}) << '\n';
  } else {
    out << "  first difference: oracle only: " << format_itemset(ds, Itemset{ib->first, ib->second}) << '\n';
  }
  return false;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ds = load_fimi(o.path);
  if (ds.num_items() > oracle::kMaxItems) {
    err << "verify: refusing dataset with " << ds.num_items() << " items; the oracle handles at most "
        << oracle::kMaxItems << '\n';
    return kGuardRefused;
  }
  bool ok = true;
  auto check = [&](const std::string& label, std::vector<Itemset> mined, const std::vector<Itemset>& expected) {
    if (o.corrupt && !mined.empty()) ++mined.front().support;
    const bool same = same_results(ds, mined, expected, out);
    out << (same ? "PASS " : "FAIL ") << label << " (" << expected.size() << " itemsets)\n";
    ok = ok && same;
  };
  if (o.algo == "nmost" || o.algo == "both") {
    auto mined = mine_nmost(ds, nmost_config(o, o.n));
    check("nmost n=" + std::to_string(o.n) + " kmax=" + std::to_string(o.kmax), flatten(mined.by_length),
          flatten(oracle::nmost(ds, o.n, o.kmax)));
  }
  if (o.algo == "topk" || o.algo == "both") {
    auto mined = mine_topk(ds, topk_config(o, o.k));
    check("topk k=" + std::to_string(o.k) + " minl=" + std::to_string(o.minl), mined.itemsets,
          oracle::topk(ds, o.k, o.minl));
  }
  return ok ? kOk : kMismatch;
}

void add_common(CLI::App& app, Options& o) {
  app.add_option("--order", o.order, "Tail order: dec or inc")
      ->check(CLI::IsMember({"dec", "inc"}))
      ->envname("BITMINER_ORDER");
  app.add_flag("--no-pair-prune", o.no_pair_prune, "Disable 2-itemset pair pruning")
      ->envname("BITMINER_NO_PAIR_PRUNE");
  app.add_flag("--no-fused", o.no_fused, "Count and project in two separate passes")
      ->envname("BITMINER_NO_FUSED");
  app.add_option("--word-width", o.word_width, "Bit-vector word width")
      ->check(CLI::IsMember({32u, 64u}))
      ->envname("BITMINER_WORD_WIDTH");
  app.add_option("--seed", o.seed, "Seed for generated datasets")->envname("BITMINER_SEED");
  app.add_option("--csv", o.csv, "Write a CSV report to this path")->envname("BITMINER_CSV");
}

void add_n(CLI::App& app, Options& o) {
  app.add_option("--n", o.n, "Itemsets per length")->check(CLI::PositiveNumber)->envname("BITMINER_N");
  app.add_option("--kmax", o.kmax, "Longest itemset length")->check(CLI::PositiveNumber)->envname("BITMINER_KMAX");
}

void add_k(CLI::App& app, Options& o) {
  app.add_option("--k", o.k, "Closed itemsets to return")->check(CLI::PositiveNumber)->envname("BITMINER_K");
  app.add_option("--minl", o.minl, "Minimum itemset length")->check(CLI::PositiveNumber)->envname("BITMINER_MINL");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Frequent itemset mining without a minimum support threshold", "bitminer"};
  app.require_subcommand(1);

  auto* nmost = app.add_subcommand("nmost", "N most frequent itemsets of each length up to kmax");
  nmost->add_option("path", o.path, "FIMI dataset")->required();
  add_n(*nmost, o);
  add_common(*nmost, o);

  auto* topk = app.add_subcommand("topk", "K most frequent closed itemsets of length >= minl");
  topk->add_option("path", o.path, "FIMI dataset")->required();
  add_k(*topk, o);
  add_common(*topk, o);

  auto* bench = app.add_subcommand("bench", "Sweep N or K and write one CSV row per point");
  bench->add_option("path", o.path, "FIMI dataset");
  bench->add_option("--algo", o.algo, "nmost or topk")->check(CLI::IsMember({"nmost", "topk"}));
  bench->add_option("--sweep", o.sweep, "Comma separated N (nmost) or K (topk) values")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--kmax", o.kmax, "Longest itemset length")->check(CLI::PositiveNumber)->envname("BITMINER_KMAX");
  bench->add_option("--minl", o.minl, "Minimum itemset length")->check(CLI::PositiveNumber)->envname("BITMINER_MINL");
  bench->add_option("--gen", o.gen, "Generate ITEMS,TRANSACTIONS,DENSITY")->delimiter(',');
  bench->add_option("--quest", o.quest, "Generate ITEMS,TRANSACTIONS,AVG_LEN,AVG_PATTERN_LEN")->delimiter(',');
  add_common(*bench, o);

  auto* verify = app.add_subcommand("verify", "Compare a miner against the brute-force oracle");
  verify->add_option("path", o.path, "FIMI dataset")->required();
  verify->add_option("--algo", o.algo, "nmost, topk or both")->check(CLI::IsMember({"nmost", "topk", "both"}));
  add_n(*verify, o);
  add_k(*verify, o);
  add_common(*verify, o);
  verify->add_flag("--corrupt-result", o.corrupt, "Alter one mined itemset before comparing")->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (nmost->parsed()) return cmd_mine(o, true, out, err);
    if (topk->parsed()) return cmd_mine(o, false, out, err);
    if (bench->parsed()) return cmd_bench(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
  } catch (const ParseError& e) {
    err << "bitminer: " << o.path << ": " << e.what() << '\n';
    return kInputError;
  } catch (const IoError& e) {
    err << "bitminer: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "bitminer: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

}  // namespace bitminer::cli
