#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "cohui/dataset.hpp"

namespace cohui {

using Rank = std::uint32_t;

/// First-scan statistics: transaction-weighted utilization and support of
/// every item. twu(i) is the sum of tu(T) over transactions containing i.
struct ItemStats {
  std::unordered_map<ItemId, Money> twu;
  std::unordered_map<ItemId, Count> support;
};

/// Dense renaming of the retained items in TWU-ascending order, ties broken
/// by ascending original id.
struct ItemOrder {
  std::vector<ItemId> item_of_rank;
  std::unordered_map<ItemId, Rank> rank_of;

  std::size_t size() const { return item_of_rank.size(); }
};

struct RankedEntry {
  Rank rank = 0;
  Money utility = 0;
};

/// The database after root pruning: only retained items, renamed to ranks,
/// entries rank-sorted within each transaction, empty transactions dropped,
/// transactions sorted by the back-to-front lexicographic order.
struct OrderedDatabase {
  std::vector<RankedEntry> entries;       // all transactions, flattened
  std::vector<std::uint32_t> tx_begin;    // offsets into entries, size n+1
  std::vector<std::uint32_t> tids;
  std::vector<Money> tx_utility;          // full utility of each rewritten transaction
  std::vector<Count> singleton_support;   // per rank, frozen from the first scan
  std::vector<Money> singleton_utility;   // per rank: u({i})
  ItemOrder order;
  double threshold = 0.0;                 // absolute utility threshold

  std::size_t item_count() const { return order.size(); }
  std::size_t transaction_count() const { return tids.size(); }
  std::span<const RankedEntry> transaction(std::size_t t) const {
    return {entries.data() + tx_begin[t], entries.data() + tx_begin[t + 1]};
  }
};

ItemStats compute_item_stats(const Database& db);

/// Items whose TWU meets the absolute threshold, ascending id.
std::vector<ItemId> build_secondary_root(const ItemStats& stats,
                                         double threshold);

ItemOrder build_order(const std::vector<ItemId>& secondary,
                      const ItemStats& stats);

/// Strict weak ordering on transactions: compare item by item from the back;
/// the first unequal rank decides (lower rank precedes); an exact back-suffix
/// precedes the longer transaction; equal item sequences order by tid.
bool transaction_precedes(std::span<const RankedEntry> a, std::uint32_t tid_a,
                          std::span<const RankedEntry> b, std::uint32_t tid_b);

OrderedDatabase rewrite_database(const Database& db, const ItemOrder& order,
                                 const std::vector<ItemId>& secondary,
                                 double threshold);

/// Ranks whose root subtree utility meets the threshold, ascending.
std::vector<Rank> compute_primary_root(const OrderedDatabase& odb,
                                       double threshold);

}  // namespace cohui
