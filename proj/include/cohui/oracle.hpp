#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohui/miner.hpp"

namespace cohui {

/// Guards against accidental exponential enumerations.
struct OracleCaps {
  std::size_t max_items = 20;
  std::optional<std::size_t> max_length;
};

class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  std::vector<Pattern> records;
  std::uint64_t enumerated = 0;  // itemsets evaluated
};

/// Brute-force reference: evaluates every itemset over the items present in
/// db (up to max_length) with independent full scans, and returns the ones
/// satisfying both thresholds, sorted by pattern_order. Throws CapError when
/// the lattice exceeds the caps.
OracleResult enumerate_all(const Database& db, const MiningParams& params,
                           const OracleCaps& caps = {});

struct ValueMismatch {
  std::vector<ItemId> items;
  Money utility_mined = 0, utility_ref = 0;
  Count support_mined = 0, support_ref = 0;
  double kulc_mined = 0.0, kulc_ref = 0.0;
};

struct DiffReport {
  std::vector<std::vector<ItemId>> missing;   // in reference, not mined
  std::vector<std::vector<ItemId>> spurious;  // mined, not in reference
  std::vector<ValueMismatch> mismatches;

  bool empty() const {
    return missing.empty() && spurious.empty() && mismatches.empty();
  }
  std::string to_string() const;
};

/// Compares a mined record list against the reference. Utilities and
/// supports must match exactly; kulc values within 1e-9.
DiffReport compare(const std::vector<Pattern>& mined,
                   const OracleResult& reference);

/// One pattern found in postfilter mode but lost to subtree pruning, traced
/// to the first search-order prefix whose correlation falls below min_cor.
struct PruneLoss {
  std::vector<ItemId> items;
  double pattern_kulc = 0.0;
  std::vector<ItemId> blocking_prefix;  // empty when unexplained
  double prefix_kulc = 0.0;
};

struct PruneAudit {
  std::vector<PruneLoss> losses;
  bool all_explained = true;
};

/// Explains every pattern present in `postfilter` but absent from `pruned`
/// by locating a low-correlation prefix along the search order.
PruneAudit audit_prune_losses(const Database& db, const MiningParams& params,
                              const std::vector<Pattern>& postfilter,
                              const std::vector<Pattern>& pruned);

}  // namespace cohui
