#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cohui/preprocess.hpp"

namespace cohui {

enum class KulcMode {
  prune,       // skip the subtree of any itemset below the correlation threshold
  postfilter,  // apply the correlation threshold at emission only
};

enum class BoundsMode {
  lu_su,     // local/subtree utility bounds
  twu_only,  // per-node transaction-weighted utilization bound (baseline)
};

/// A discovered pattern: items in ascending original id.
struct Pattern {
  std::vector<ItemId> items;
  Money utility = 0;
  Count support = 0;
  double kulc = 0.0;
};

/// Hook for observing every candidate itemset whose utility the search
/// computed. Used by tests and diagnostics.
struct CandidateObserver {
  virtual ~CandidateObserver() = default;
  virtual void on_candidate(const std::vector<ItemId>& items, Money utility,
                            Count support, bool emitted) = 0;
};

struct MiningParams {
  double min_util = 0.0;  // fraction of TU, or absolute money when absolute_threshold
  double min_cor = 0.0;   // minimum Kulczynski value, in [0,1]
  bool absolute_threshold = false;
  KulcMode kulc_mode = KulcMode::prune;
  BoundsMode bounds_mode = BoundsMode::lu_su;
  std::optional<std::size_t> max_pattern_length;
  CandidateObserver* observer = nullptr;
};

struct MiningStats {
  std::uint64_t candidates = 0;   // extensions whose utility was computed
  std::uint64_t patterns = 0;
  std::uint64_t kulc_pruned = 0;  // subtrees skipped by the correlation test
  double wall_ms = 0.0;
  std::optional<std::size_t> peak_memory_bytes;  // filled by callers that sample it
};

struct MiningResult {
  std::vector<Pattern> records;
  MiningStats stats;
};

/// Kulczynski measure: mean of sup(X)/sup(member). Throws
/// std::invalid_argument on an empty member list or a zero member support.
double kulc(Count support, std::span<const Count> member_supports);

/// Emits every retained single item whose utility meets the threshold
/// (singletons always have kulc 1).
void emit_singletons(const OrderedDatabase& odb, double threshold,
                     std::vector<Pattern>& sink);

/// (length, lexicographic items) order used for all pattern output.
bool pattern_order(const Pattern& a, const Pattern& b);

/// Mines all correlated high-utility itemsets of db. Throws
/// std::invalid_argument on out-of-range parameters. Records are sorted by
/// pattern_order; the result is deterministic.
MiningResult mine(const Database& db, const MiningParams& params);

}  // namespace cohui
