#include "cohui/preprocess.hpp"

#include <algorithm>
#include <numeric>

#include "cohui/bounds.hpp"
#include "cohui/projection.hpp"

namespace cohui {

ItemStats compute_item_stats(const Database& db) {
  ItemStats stats;
  for (const Transaction& tx : db.transactions) {
    for (const ItemUtility& e : tx.entries) {
      stats.twu[e.item] += tx.tu;
      stats.support[e.item] += 1;
    }
  }
  return stats;
}

std::vector<ItemId> build_secondary_root(const ItemStats& stats,
                                         double threshold) {
  std::vector<ItemId> out;
  for (const auto& [item, twu] : stats.twu) {
    if (static_cast<double>(twu) >= threshold) out.push_back(item);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ItemOrder build_order(const std::vector<ItemId>& secondary,
                      const ItemStats& stats) {
  ItemOrder order;
  order.item_of_rank = secondary;
  std::sort(order.item_of_rank.begin(), order.item_of_rank.end(),
            [&](ItemId a, ItemId b) {
              Money ta = stats.twu.at(a), tb = stats.twu.at(b);
              if (ta != tb) return ta < tb;
              return a < b;
            });
  order.rank_of.reserve(order.item_of_rank.size());
  for (Rank r = 0; r < order.item_of_rank.size(); ++r) {
    order.rank_of[order.item_of_rank[r]] = r;
  }
  return order;
}

bool transaction_precedes(std::span<const RankedEntry> a, std::uint32_t tid_a,
                          std::span<const RankedEntry> b, std::uint32_t tid_b) {
  std::size_t ia = a.size(), ib = b.size();
  while (ia > 0 && ib > 0) {
    Rank ra = a[ia - 1].rank, rb = b[ib - 1].rank;
    if (ra != rb) return ra < rb;
    --ia;
    --ib;
  }
  if (a.size() != b.size()) return a.size() < b.size();
  return tid_a < tid_b;
}

OrderedDatabase rewrite_database(const Database& db, const ItemOrder& order,
                                 const std::vector<ItemId>& secondary,
                                 double threshold) {
  if (order.size() != secondary.size()) {
    throw std::invalid_argument("item order does not cover the secondary set");
  }

  struct Rewritten {
    std::uint32_t tid;
    std::vector<RankedEntry> entries;
  };
  std::vector<Rewritten> kept;
  kept.reserve(db.transactions.size());
  for (const Transaction& tx : db.transactions) {
    std::vector<RankedEntry> entries;
    for (const ItemUtility& e : tx.entries) {
      auto it = order.rank_of.find(e.item);
      if (it != order.rank_of.end()) entries.push_back({it->second, e.utility});
    }
    if (entries.empty()) continue;
    std::sort(entries.begin(), entries.end(),
              [](const RankedEntry& x, const RankedEntry& y) {
                return x.rank < y.rank;
              });
    kept.push_back({tx.tid, std::move(entries)});
  }

  std::sort(kept.begin(), kept.end(), [](const Rewritten& x, const Rewritten& y) {
    return transaction_precedes(x.entries, x.tid, y.entries, y.tid);
  });

  OrderedDatabase odb;
  odb.order = order;
  odb.threshold = threshold;
  odb.singleton_support.assign(order.size(), 0);
  odb.singleton_utility.assign(order.size(), 0);

  odb.tx_begin.reserve(kept.size() + 1);
  odb.tx_begin.push_back(0);
  for (Rewritten& tx : kept) {
    Money tu = 0;
    for (const RankedEntry& e : tx.entries) {
      odb.entries.push_back(e);
      // Removing other items never drops a transaction containing this one,
      // so these counts equal the first-scan supports.
      odb.singleton_support[e.rank] += 1;
      odb.singleton_utility[e.rank] += e.utility;
      tu += e.utility;
    }
    odb.tx_begin.push_back(static_cast<std::uint32_t>(odb.entries.size()));
    odb.tids.push_back(tx.tid);
    odb.tx_utility.push_back(tu);
  }
  return odb;
}

std::vector<Rank> compute_primary_root(const OrderedDatabase& odb,
                                       double threshold) {
  std::vector<Rank> out;
  if (odb.item_count() == 0) return out;
  UtilityBinArray su(odb.item_count());
  ProjectedView root = root_view(odb);
  compute_subtree_utility(root, su);
  for (Rank r = 0; r < odb.item_count(); ++r) {
    if (static_cast<double>(su[r]) >= threshold) out.push_back(r);
  }
  return out;
}

}  // namespace cohui
