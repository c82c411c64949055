#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cohui/dataset.hpp"
#include "cohui/preprocess.hpp"

namespace testsupport {

// Eight transactions over items 1..6 (profits 4,2,1,3,2,1 pre-multiplied
// into the per-item utilities). Total utility 167.
inline const char* kSampleDb =
    "1 2 3 4:19:4 4 2 9\n"
    "1 2 5 6:18:8 2 6 2\n"
    "1 3 5:23:16 3 4\n"
    "1 3 6:17:12 2 3\n"
    "2 3 4:25:6 4 15\n"
    "2 3 4 6:21:4 3 9 5\n"
    "1 2 3 4 5 6:31:4 4 2 9 10 2\n"
    "3 4 5:13:2 9 2\n";

inline cohui::Database sample_db() {
  std::istringstream in(kSampleDb);
  return cohui::load_database(in);
}

inline cohui::Database load_text(const std::string& text,
                                 const cohui::LoadOptions& options = {}) {
  std::istringstream in(text);
  return cohui::load_database(in, options);
}

// Small random database for property tests: up to max_items items,
// up to max_transactions transactions, per-item utilities in [1, max_utility].
inline cohui::Database random_db(std::mt19937_64& rng,
                                 std::size_t max_items = 12,
                                 std::size_t max_transactions = 30,
                                 cohui::Money max_utility = 20) {
  std::uniform_int_distribution<std::size_t> item_count(2, max_items);
  std::uniform_int_distribution<std::size_t> tx_count(1, max_transactions);
  std::size_t m = item_count(rng);
  std::size_t n = tx_count(rng);

  cohui::Database db;
  std::uniform_int_distribution<std::size_t> len_dist(1, m);
  std::uniform_int_distribution<cohui::Money> util_dist(1, max_utility);
  std::vector<cohui::ItemId> pool(m);
  for (std::size_t i = 0; i < m; ++i) pool[i] = static_cast<cohui::ItemId>(i + 1);

  for (std::size_t t = 0; t < n; ++t) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t len = len_dist(rng);
    cohui::Transaction tx;
    tx.tid = static_cast<std::uint32_t>(t + 1);
    std::vector<cohui::ItemId> chosen(pool.begin(), pool.begin() + len);
    std::sort(chosen.begin(), chosen.end());
    for (cohui::ItemId item : chosen) {
      cohui::Money u = util_dist(rng);
      tx.entries.push_back({item, u});
      tx.tu += u;
    }
    db.transactions.push_back(std::move(tx));
    db.total_utility += db.transactions.back().tu;
  }
  return db;
}

// Rewritten database with every item retained (threshold as given).
inline cohui::OrderedDatabase ordered_db(const cohui::Database& db,
                                         double threshold = 0.0) {
  cohui::ItemStats stats = cohui::compute_item_stats(db);
  std::vector<cohui::ItemId> secondary =
      cohui::build_secondary_root(stats, threshold);
  cohui::ItemOrder order = cohui::build_order(secondary, stats);
  return cohui::rewrite_database(db, order, secondary, threshold);
}

}  // namespace testsupport
