#include <doctest.h>

#include "bitminer/oracle.hpp"
#include "bitminer/topk.hpp"
#include "fixtures.hpp"

using namespace bitminer;
using namespace bitminer::test;

TEST_CASE("TopKList") {
  TopKList one(1);
  CHECK(one.offer(Itemset{{0}, 4}) == 4);
  CHECK(one.offer(Itemset{{1}, 5}) == 5);
  CHECK(one.results() == std::vector<Itemset>{Itemset{{1}, 5}});
  CHECK(one.threshold_log() == std::vector<Support>{4, 5});

  TopKList few(3);
  few.offer(Itemset{{0}, 7});
  CHECK(few.threshold() == 0);

  TopKList ties(2);
  ties.offer(Itemset{{0}, 3});
  ties.offer(Itemset{{1}, 2});
  CHECK(ties.threshold() == 2);
  ties.offer(Itemset{{2}, 2});
  CHECK(ties.size() == 3);

  TopKList sup(5);
  sup.offer(Itemset{{0, 1, 2}, 3});
  CHECK(sup.has_superset_with_support(std::vector<ItemId>{0, 2}, 3));
  CHECK_FALSE(sup.has_superset_with_support(std::vector<ItemId>{0, 2}, 2));
  CHECK_FALSE(sup.has_superset_with_support(std::vector<ItemId>{0, 1, 2}, 3));
  CHECK_FALSE(sup.has_superset_with_support(std::vector<ItemId>{3}, 3));
}

TEST_CASE("mine_topk on the sample dataset") {
  const auto ds = sample();
  TopKConfig cfg;
  cfg.k = 3;
  cfg.min_length = 1;
  CHECK(mine_topk(ds, cfg).itemsets ==
        std::vector<Itemset>{set_of(ds, {A}, 5), set_of(ds, {B}, 5), set_of(ds, {A, B}, 4)});

  cfg.k = 2;
  cfg.min_length = 2;
  const auto r = mine_topk(ds, cfg);
  CHECK(r.itemsets == std::vector<Itemset>{set_of(ds, {A, B}, 4), set_of(ds, {A, B, C}, 2), set_of(ds, {A, B, D}, 2)});
  CHECK(r.final_threshold == 2);

  cfg.k = 1000;
  cfg.min_length = 1;
  CHECK(mine_topk(ds, cfg).itemsets.size() == 10);

  cfg.min_length = 99;
  CHECK(mine_topk(ds, cfg).itemsets.empty());
}

TEST_CASE("is_closed on sample nodes") {
  const auto ds = sample();
  const BitMatrix<std::uint64_t> m(ds, 1);
  MiningCounters counters;
  Expander<std::uint64_t> ex(m, nullptr, {TailOrder::by_id, false, true}, 256, counters);
  auto root = ex.make_root();
  auto pos_of = [&](const SearchNode<std::uint64_t>& n, ItemId item) {
    for (std::size_t p = 0; p < n.tail.size(); ++p) {
      if (n.tail[p].item == item) return p;
    }
    FAIL("item not in tail");
    return std::size_t{0};
  };

  // {D}: A extends it at equal support, and A is ordered before D.
  auto d = ex.expand(root, pos_of(root, id(ds, D)));
  ex.count_tail(d, 1, true);
  CHECK(d.support == 2);
  CHECK_FALSE(is_closed(d, ex));

  auto a = ex.expand(root, pos_of(root, id(ds, A)));
  ex.count_tail(a, 1, true);
  auto ab = ex.expand(a, pos_of(a, id(ds, B)));
  ex.count_tail(ab, 1, true);
  CHECK(ab.support == 4);
  CHECK(is_closed(ab, ex));

  // Everything in one transaction: no extension is possible.
  const auto one = parse_fimi(std::string_view("4 5 6\n"));
  const BitMatrix<std::uint32_t> m1(one);
  Expander<std::uint32_t> ex1(m1, nullptr, {TailOrder::by_id, false, true}, 16, counters);
  auto r1 = ex1.make_root();
  auto n = ex1.expand(r1, 0);
  ex1.count_tail(n, 1, true);
  auto nn = ex1.expand(n, 0);
  ex1.count_tail(nn, 1, true);
  auto full = ex1.expand(nn, 0);
  ex1.count_tail(full, 1, true);
  CHECK(full.tail.empty());
  CHECK(is_closed(full, ex1));
}

TEST_CASE("mine_topk matches the oracle and every result is closed") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto c = corpus_case(seed);
    for (std::size_t k = 1; k <= 6; k += 2) {
      for (std::size_t minl = 1; minl <= 4; ++minl) {
        TopKConfig cfg;
        cfg.k = k;
        cfg.min_length = minl;
        cfg.order = seed % 2 ? TailOrder::decreasing : TailOrder::increasing;
        cfg.pair_prune = seed % 3 != 1;
        cfg.fused = seed % 4 != 2;
        cfg.word_width = seed % 5 == 1 ? 32 : 64;
        cfg.arena_capacity = seed % 6 == 0 ? 2 : 0;
        cfg.list_prefilter = seed % 8 != 3;
        const auto r = mine_topk(c.ds, cfg);
        CHECK_MESSAGE(r.itemsets == oracle::topk(c.ds, k, minl), "seed=" << seed << " k=" << k << " minl=" << minl);
        for (const auto& x : r.itemsets) CHECK(oracle::audit_closed(c.ds, x));
        CHECK(std::is_sorted(r.threshold_log.begin(), r.threshold_log.end()));
      }
    }
  }
}

TEST_CASE("mine_topk rejects invalid configs") {
  const auto ds = sample();
  TopKConfig cfg;
  cfg.k = 0;
  CHECK_THROWS_AS(mine_topk(ds, cfg), std::invalid_argument);
  cfg.k = 1;
  cfg.min_length = 0;
  CHECK_THROWS_AS(mine_topk(ds, cfg), std::invalid_argument);
  cfg.min_length = 1;
  cfg.word_width = 8;
  CHECK_THROWS_AS(mine_topk(ds, cfg), std::invalid_argument);
  CHECK(mine_topk(parse_fimi(std::string_view("")), TopKConfig{}).itemsets.empty());
}
