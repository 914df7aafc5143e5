#include <doctest.h>

#include <numeric>
#include <sstream>

#include "bitminer/dataset.hpp"
#include "fixtures.hpp"

using namespace bitminer;
using namespace bitminer::test;

TEST_CASE("parse_fimi reads the sample dataset") {
  const auto ds = sample();
  CHECK(ds.num_transactions() == 7);
  CHECK(ds.num_items() == 5);
  // ids follow first appearance: 1 2 3 5 4
  CHECK(ds.label(0) == 1);
  CHECK(ds.label(3) == 5);
  CHECK(ds.label(4) == 4);
  CHECK(ds.transaction(1) == ids(ds, {A, B, I}));
}

TEST_CASE("parse_fimi edge cases") {
  SUBCASE("empty input") {
    const auto ds = parse_fimi(std::string_view(""));
    CHECK(ds.num_transactions() == 0);
    CHECK(ds.num_items() == 0);
  }
  SUBCASE("duplicates collapse") {
    const auto ds = parse_fimi(std::string_view("3 3 3\n"));
    REQUIRE(ds.num_transactions() == 1);
    CHECK(ds.transaction(0).size() == 1);
    CHECK(ds.num_items() == 1);
  }
  SUBCASE("blank lines, tabs and CRLF") {
    const auto ds = parse_fimi(std::string_view("1\t2\r\n\r\n   \n2 7\r\n"));
    CHECK(ds.num_transactions() == 2);
    CHECK(ds.num_items() == 3);
    CHECK(ds.transaction(1) == std::vector<ItemId>{1, 2});
  }
  SUBCASE("large labels survive") {
    const auto ds = parse_fimi(std::string_view("18446744073709551615 0\n"));
    CHECK(ds.label(0) == 18446744073709551615ULL);
    CHECK(ds.label(1) == 0);
  }
}

TEST_CASE("parse_fimi rejects bad tokens with the line number") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_fimi(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("1 2\n3 x\n") == 2);
  CHECK(line_of("1 2\n\n4 -5\n") == 3);
  CHECK(line_of("1.5\n") == 1);
  CHECK(line_of("99999999999999999999999\n") == 1);
  CHECK_THROWS_AS(load_fimi("/nonexistent/file.dat"), IoError);
}

TEST_CASE("write_fimi then parse_fimi preserves every transaction's label set") {
  auto label_sets = [](const TransactionDataset& ds) {
    std::vector<std::vector<ItemLabel>> out;
    for (const auto& t : ds.transactions()) {
      std::vector<ItemLabel> ls;
      for (ItemId i : t) ls.push_back(ds.label(i));
      std::sort(ls.begin(), ls.end());
      out.push_back(std::move(ls));
    }
    return out;
  };
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = corpus_case(seed);
    std::ostringstream text;
    write_fimi(text, c.ds);
    const auto back = parse_fimi(std::string_view(text.str()));
    CHECK(label_sets(back) == label_sets(c.ds));
    // Once read back, ids are in first-appearance order and stay put.
    std::ostringstream again;
    write_fimi(again, back);
    const auto twice = parse_fimi(std::string_view(again.str()));
    for (std::size_t t = 0; t < back.num_transactions(); ++t) CHECK(twice.transaction(t) == back.transaction(t));
  }
}

TEST_CASE("item_supports") {
  const auto ds = sample();
  const auto s = item_supports(ds);
  CHECK(s[id(ds, A)] == 5);
  CHECK(s[id(ds, B)] == 5);
  CHECK(s[id(ds, C)] == 3);
  CHECK(s[id(ds, D)] == 2);
  CHECK(s[id(ds, I)] == 2);

  CHECK(item_supports(parse_fimi(std::string_view(""))).empty());

  const auto single = TransactionDataset({{0}}, {1, 2, 3});
  CHECK(item_supports(single) == std::vector<Support>{1, 0, 0});

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = corpus_case(seed);
    const auto sup = item_supports(c.ds);
    CHECK(std::accumulate(sup.begin(), sup.end(), std::size_t{0}) == c.ds.total_length());
  }
}

TEST_CASE("remap_for_density") {
  const auto ds = sample();
  SUBCASE("floor 3 keeps A, B, C") {
    const auto r = remap_for_density(ds, 3);
    CHECK(r.dataset.num_items() == 3);
    CHECK(r.dataset.find(D) == std::nullopt);
    CHECK(r.dataset.find(I) == std::nullopt);
    // every transaction keeps at least one of A, B, C
    REQUIRE(r.dataset.num_transactions() == 7);
    CHECK(r.dataset.transaction(4) == ids(r.dataset, {A, B}));  // 05: A B D
    CHECK(r.dataset.transaction(6) == ids(r.dataset, {A}));     // 07: A
    CHECK(r.dataset.transaction(3) == ids(r.dataset, {C}));     // 04: C I
    for (ItemId n = 0; n < r.dataset.num_items(); ++n) {
      CHECK(r.dataset.label(n) == ds.label(r.original_id[n]));
    }
  }
  SUBCASE("floor 0 is the identity") {
    const auto r = remap_for_density(ds, 0);
    CHECK(r.dataset.num_items() == ds.num_items());
    CHECK(r.dataset.num_transactions() == ds.num_transactions());
    for (std::size_t t = 0; t < ds.num_transactions(); ++t) CHECK(r.dataset.transaction(t) == ds.transaction(t));
  }
  SUBCASE("floor above every support empties the dataset") {
    const auto r = remap_for_density(ds, 6);
    CHECK(r.dataset.num_items() == 0);
    CHECK(r.dataset.num_transactions() == 0);
  }
  SUBCASE("retained supports are unchanged") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto c = corpus_case(seed);
      const auto before = item_supports(c.ds);
      const Support floor = static_cast<Support>(seed % 8);
      const auto r = remap_for_density(c.ds, floor);
      const auto after = item_supports(r.dataset);
      for (ItemId n = 0; n < after.size(); ++n) {
        CHECK(after[n] == before[r.original_id[n]]);
        CHECK(after[n] >= floor);
      }
    }
  }
  SUBCASE("empty transactions are dropped") {
    const auto r = remap_for_density(parse_fimi(std::string_view("1 2\n3\n1\n")), 2);
    CHECK(r.dataset.num_transactions() == 2);
  }
}

TEST_CASE("generate_synthetic") {
  const auto full = generate_synthetic(5, 10, 1.0, 99);
  CHECK(full.num_transactions() == 10);
  for (const auto& t : full.transactions()) CHECK(t.size() == 5);

  CHECK(generate_synthetic(0, 10, 0.5, 3).num_transactions() == 0);
  CHECK(generate_synthetic(5, 0, 0.5, 3).num_transactions() == 0);

  const auto a = generate_synthetic(12, 64, 0.3, 42);
  const auto b = generate_synthetic(12, 64, 0.3, 42);
  REQUIRE(a.num_transactions() == b.num_transactions());
  for (std::size_t t = 0; t < a.num_transactions(); ++t) CHECK(a.transaction(t) == b.transaction(t));
  CHECK(a.label(0) == 1);
}

TEST_CASE("generate_quest is deterministic with the requested shape") {
  QuestParams p;
  p.num_items = 200;
  p.num_transactions = 5000;
  p.num_patterns = 100;
  const auto a = generate_quest(p, 7);
  const auto b = generate_quest(p, 7);
  REQUIRE(a.num_transactions() == b.num_transactions());
  for (std::size_t t = 0; t < a.num_transactions(); t += 97) CHECK(a.transaction(t) == b.transaction(t));
  const double mean = static_cast<double>(a.total_length()) / static_cast<double>(a.num_transactions());
  CHECK(mean > 6.0);
  CHECK(mean < 14.0);
  CHECK(a.num_transactions() > 4900);
}
