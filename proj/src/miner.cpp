#include "cohui/miner.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "cohui/bounds.hpp"
#include "cohui/projection.hpp"

namespace cohui {

double kulc(Count support, std::span<const Count> member_supports) {
  if (member_supports.empty()) {
    throw std::invalid_argument("kulc of an empty itemset");
  }
  double sum = 0.0;
  for (Count m : member_supports) {
    if (m <= 0) {
      throw std::invalid_argument("kulc member with zero support");
    }
    sum += static_cast<double>(support) / static_cast<double>(m);
  }
  return sum / static_cast<double>(member_supports.size());
}

void emit_singletons(const OrderedDatabase& odb, double threshold,
                     std::vector<Pattern>& sink) {
  for (Rank r = 0; r < odb.item_count(); ++r) {
    Money u = odb.singleton_utility[r];
    if (static_cast<double>(u) >= threshold) {
      sink.push_back({{odb.order.item_of_rank[r]}, u, odb.singleton_support[r], 1.0});
    }
  }
}

bool pattern_order(const Pattern& a, const Pattern& b) {
  if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
  return a.items < b.items;
}

namespace {

void validate(const MiningParams& params) {
  if (params.min_util < 0.0) {
    throw std::invalid_argument("min_util must be non-negative");
  }
  if (!params.absolute_threshold && params.min_util > 1.0) {
    throw std::invalid_argument("relative min_util must be in [0,1]");
  }
  if (params.min_cor < 0.0 || params.min_cor > 1.0) {
    throw std::invalid_argument("min_cor must be in [0,1]");
  }
  if (params.max_pattern_length && *params.max_pattern_length == 0) {
    throw std::invalid_argument("max_pattern_length must be at least 1");
  }
}

/// Per-node bound in the baseline mode: each suffix item's bin receives the
/// full utility of the rewritten transaction, i.e. the node-scope TWU.
void compute_node_twu(const ProjectedView& view, UtilityBinArray& ua) {
  ua.reset();
  const OrderedDatabase& base = *view.base;
  for (const ProjectedRow& row : view.rows) {
    Money tu = base.tx_utility[row.tx];
    for (const RankedEntry& e : view.suffix(row)) ua.add(e.rank, tu);
  }
}

struct SearchEngine {
  const OrderedDatabase& odb;
  const MiningParams& params;
  double threshold;
  std::vector<Pattern>& records;
  MiningStats& stats;

  UtilityBinArray lu_bins;
  UtilityBinArray su_bins;
  std::vector<Rank> path;
  std::vector<Count> member_supports;
  std::vector<ItemId> item_buffer;

  SearchEngine(const OrderedDatabase& odb_, const MiningParams& params_,
               double threshold_, std::vector<Pattern>& records_,
               MiningStats& stats_)
      : odb(odb_),
        params(params_),
        threshold(threshold_),
        records(records_),
        stats(stats_),
        lu_bins(odb_.item_count()),
        su_bins(odb_.item_count()) {}

  std::vector<ItemId> path_items() const {
    std::vector<ItemId> items;
    items.reserve(path.size());
    for (Rank r : path) items.push_back(odb.order.item_of_rank[r]);
    std::sort(items.begin(), items.end());
    return items;
  }

  double path_kulc(Count support) {
    member_supports.clear();
    for (Rank r : path) member_supports.push_back(odb.singleton_support[r]);
    return kulc(support, member_supports);
  }

  void search(const ProjectedView& view, std::span<const Rank> primary,
              std::span<const Rank> secondary) {
    for (Rank i : primary) {
      Extension ext = extend(view, i);
      ++stats.candidates;
      path.push_back(i);

      if (ext.support == 0) {
        // The item vanished from this subtree; every bound is zero too.
        if (params.observer) {
          params.observer->on_candidate(path_items(), 0, 0, false);
        }
        path.pop_back();
        continue;
      }

      double k = path_kulc(ext.support);
      bool qualifies = static_cast<double>(ext.utility) >= threshold &&
                       k >= params.min_cor;
      if (params.observer) {
        params.observer->on_candidate(path_items(), ext.utility, ext.support,
                                      qualifies);
      }
      // Depth-1 itemsets were already emitted by emit_singletons.
      if (qualifies && path.size() > 1) {
        records.push_back({path_items(), ext.utility, ext.support, k});
      }

      bool recurse = true;
      if (params.kulc_mode == KulcMode::prune && k < params.min_cor) {
        ++stats.kulc_pruned;
        recurse = false;
      }
      if (params.max_pattern_length && path.size() >= *params.max_pattern_length) {
        recurse = false;
      }
      if (recurse) {
        auto begin = std::upper_bound(secondary.begin(), secondary.end(), i);
        std::span<const Rank> candidates(begin, secondary.end());
        if (!candidates.empty()) descend(ext.view, candidates);
      }
      path.pop_back();
    }
  }

  void descend(const ProjectedView& view, std::span<const Rank> candidates) {
    if (params.bounds_mode == BoundsMode::lu_su) {
      compute_local_utility(view, lu_bins);
      compute_subtree_utility(view, su_bins);
      NodePartition part = partition(lu_bins, su_bins, candidates, threshold);
      if (!part.primary.empty()) search(view, part.primary, part.secondary);
    } else {
      compute_node_twu(view, lu_bins);
      std::vector<Rank> passing;
      for (Rank r : candidates) {
        if (static_cast<double>(lu_bins[r]) >= threshold) passing.push_back(r);
      }
      if (!passing.empty()) search(view, passing, passing);
    }
  }
};

}  // namespace

MiningResult mine(const Database& db, const MiningParams& params) {
  validate(params);
  MiningResult result;
  auto start = std::chrono::steady_clock::now();

  if (!db.empty()) {
    double threshold = params.absolute_threshold
                           ? params.min_util
                           : params.min_util * static_cast<double>(db.total_utility);
    ItemStats stats = compute_item_stats(db);
    std::vector<ItemId> secondary = build_secondary_root(stats, threshold);
    if (!secondary.empty()) {
      ItemOrder order = build_order(secondary, stats);
      OrderedDatabase odb = rewrite_database(db, order, secondary, threshold);
      emit_singletons(odb, threshold, result.records);
      if (odb.transaction_count() > 0) {
        SearchEngine engine(odb, params, threshold, result.records, result.stats);
        ProjectedView root = root_view(odb);
        std::vector<Rank> all_ranks(odb.item_count());
        for (Rank r = 0; r < odb.item_count(); ++r) all_ranks[r] = r;
        std::vector<Rank> primary = params.bounds_mode == BoundsMode::lu_su
                                        ? compute_primary_root(odb, threshold)
                                        : all_ranks;
        engine.search(root, primary, all_ranks);
      }
    }
  }

  std::sort(result.records.begin(), result.records.end(), pattern_order);
  result.stats.patterns = result.records.size();
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  return result;
}

}  // namespace cohui
