#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cohui/oracle.hpp"
#include "support.hpp"

using namespace cohui;
using Catch::Matchers::WithinAbs;
using testsupport::sample_db;

TEST_CASE("exhaustive enumeration on the sample") {
  Database db = sample_db();
  MiningParams params;
  params.min_util = 0.2;
  params.min_cor = 0.3;

  OracleResult result = enumerate_all(db, params);
  CHECK(result.enumerated == 63);  // all non-empty subsets of six items
  REQUIRE(result.records.size() == 14);

  // Spot-check one record end to end.
  bool found = false;
  for (const Pattern& p : result.records) {
    if (p.items == std::vector<ItemId>{2, 3, 4}) {
      found = true;
      CHECK(p.utility == 71);
      CHECK(p.support == 4);
      CHECK_THAT(p.kulc, WithinAbs(0.7238095238, 1e-9));
    }
  }
  CHECK(found);

  // Sorted by length, then lexicographically.
  for (std::size_t i = 1; i < result.records.size(); ++i) {
    CHECK(pattern_order(result.records[i - 1], result.records[i]));
  }
}

TEST_CASE("high-utility but weakly correlated itemsets are rejected") {
  Database db = sample_db();
  MiningParams params;
  params.min_util = 0.1;  // threshold 16.7
  params.min_cor = 0.7;

  OracleResult result = enumerate_all(db, params);
  bool has_bd = false;
  for (const Pattern& p : result.records) {
    CHECK(p.items != std::vector<ItemId>{1, 2});  // kulc 0.6 < 0.7
    if (p.items == std::vector<ItemId>{2, 4}) {
      has_bd = true;
      CHECK(p.utility == 60);
      CHECK_THAT(p.kulc, WithinAbs(0.8, 1e-12));
    }
  }
  CHECK(has_bd);

  // The utility side alone would have admitted {1,2}.
  CHECK(itemset_utility({1, 2}, db) >= 0.1 * 167);
}

TEST_CASE("enumeration refuses oversized lattices") {
  Database big;
  for (ItemId i = 1; i <= 21; ++i) {
    Transaction tx;
    tx.tid = i;
    tx.entries.push_back({i, 1});
    tx.tu = 1;
    big.transactions.push_back(tx);
    big.total_utility += 1;
  }
  MiningParams params;
  CHECK_THROWS_AS(enumerate_all(big, params), CapError);

  OracleCaps capped;
  capped.max_length = 2;
  CHECK_NOTHROW(enumerate_all(big, params, capped));

  OracleCaps wider;
  wider.max_items = 21;
  CHECK_NOTHROW(enumerate_all(big, params, wider));
}

TEST_CASE("length-capped enumeration counts the truncated lattice") {
  Database db = sample_db();
  MiningParams params;
  OracleCaps caps;
  caps.max_length = 2;
  OracleResult result = enumerate_all(db, params, caps);
  CHECK(result.enumerated == 6 + 15);  // C(6,1) + C(6,2)
  for (const Pattern& p : result.records) {
    CHECK(p.items.size() <= 2);
  }
}

TEST_CASE("oracle records agree with the dataset evaluators") {
  std::mt19937_64 rng(90210);
  for (int round = 0; round < 20; ++round) {
    Database db = testsupport::random_db(rng, 10, 20);
    MiningParams params;
    params.min_util = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
    params.min_cor = std::uniform_real_distribution<double>(0.0, 0.6)(rng);

    OracleResult result = enumerate_all(db, params);
    for (const Pattern& p : result.records) {
      CHECK(p.utility == itemset_utility(p.items, db));
      CHECK(p.support == itemset_support(p.items, db));
    }
  }
}

TEST_CASE("support shrinks along every chain the oracle evaluates") {
  std::mt19937_64 rng(1066);
  Database db = testsupport::random_db(rng, 8, 20);
  MiningParams params;  // thresholds zero: keep everything reachable
  OracleResult all = enumerate_all(db, params);

  for (const Pattern& p : all.records) {
    if (p.items.size() < 2) continue;
    for (std::size_t drop = 0; drop < p.items.size(); ++drop) {
      std::vector<ItemId> subset;
      for (std::size_t i = 0; i < p.items.size(); ++i) {
        if (i != drop) subset.push_back(p.items[i]);
      }
      CHECK(itemset_support(subset, db) >= p.support);
    }
  }
}

TEST_CASE("diff report classification") {
  Database db = sample_db();
  MiningParams params;
  params.min_util = 0.2;
  params.min_cor = 0.3;
  OracleResult reference = enumerate_all(db, params);

  SECTION("identical inputs produce an empty report") {
    DiffReport diff = compare(reference.records, reference);
    CHECK(diff.empty());
    CHECK(diff.to_string() == "results match\n");
  }

  SECTION("a removed record is reported as missing") {
    std::vector<Pattern> mined = reference.records;
    std::erase_if(mined, [](const Pattern& p) {
      return p.items == std::vector<ItemId>{3, 4};
    });
    DiffReport diff = compare(mined, reference);
    REQUIRE(diff.missing.size() == 1);
    CHECK(diff.missing[0] == std::vector<ItemId>{3, 4});
    CHECK(diff.spurious.empty());
    CHECK(diff.mismatches.empty());
  }

  SECTION("an added record is reported as spurious") {
    std::vector<Pattern> mined = reference.records;
    mined.push_back({{1, 6}, 10, 1, 0.5});
    std::sort(mined.begin(), mined.end(), pattern_order);
    DiffReport diff = compare(mined, reference);
    REQUIRE(diff.spurious.size() == 1);
    CHECK(diff.spurious[0] == std::vector<ItemId>{1, 6});
  }

  SECTION("tiny kulc drift stays below the tolerance") {
    std::vector<Pattern> mined = reference.records;
    mined[0].kulc += 1e-12;
    CHECK(compare(mined, reference).empty());
    mined[0].kulc += 1e-6;
    CHECK(compare(mined, reference).mismatches.size() == 1);
  }

  SECTION("value drift is reported") {
    std::vector<Pattern> mined = reference.records;
    mined[2].utility += 1;
    DiffReport diff = compare(mined, reference);
    REQUIRE(diff.mismatches.size() == 1);
    CHECK(diff.mismatches[0].items == mined[2].items);
  }
}

TEST_CASE("prune losses are traced to a low-correlation prefix") {
  // Item 3 appears in few but heavy transactions, so it sorts after 1 and 2.
  // The search-order prefix {1,2} has kulc 0.4 while {1,2,3} reaches
  // (2/5 + 2/5 + 2/3)/3 = 0.4889: subtree pruning at min_cor 0.45 loses the
  // larger pattern even though it qualifies.
  Database db = testsupport::load_text(
      "1 2 3:30:10 10 10\n"
      "1 2 3:30:10 10 10\n"
      "1:1:1\n"
      "1:1:1\n"
      "1:1:1\n"
      "2:1:1\n"
      "2:1:1\n"
      "2:1:1\n"
      "3:40:40\n");

  MiningParams params;
  params.min_util = 0.0;
  params.min_cor = 0.45;

  MiningParams post = params;
  post.kulc_mode = KulcMode::postfilter;
  MiningResult full = mine(db, post);
  MiningResult pruned = mine(db, params);

  std::set<std::vector<ItemId>> full_sets, pruned_sets;
  for (const Pattern& p : full.records) full_sets.insert(p.items);
  for (const Pattern& p : pruned.records) pruned_sets.insert(p.items);
  CHECK(full_sets.count({1, 2, 3}) == 1);
  CHECK(pruned_sets.count({1, 2, 3}) == 0);
  CHECK(pruned.stats.kulc_pruned > 0);

  PruneAudit audit = audit_prune_losses(db, params, full.records, pruned.records);
  REQUIRE(audit.losses.size() == 1);
  CHECK(audit.all_explained);
  const PruneLoss& loss = audit.losses[0];
  CHECK(loss.items == std::vector<ItemId>{1, 2, 3});
  CHECK(loss.blocking_prefix == std::vector<ItemId>{1, 2});
  CHECK_THAT(loss.prefix_kulc, WithinAbs(0.4, 1e-12));
  CHECK_THAT(loss.pattern_kulc, WithinAbs((0.4 + 0.4 + 2.0 / 3) / 3, 1e-12));

  SECTION("identical result lists produce no losses") {
    PruneAudit none = audit_prune_losses(db, params, full.records, full.records);
    CHECK(none.losses.empty());
    CHECK(none.all_explained);
  }
}
