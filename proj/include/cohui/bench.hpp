#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohui/miner.hpp"

namespace cohui {

struct BenchRow {
  std::string dataset;
  double min_util = 0.0;
  double min_cor = 0.0;
  BoundsMode bounds_mode = BoundsMode::lu_su;
  KulcMode kulc_mode = KulcMode::prune;
  std::uint64_t candidates = 0;
  std::uint64_t patterns = 0;
  double wall_ms = 0.0;  // median over repeats, mining only
  std::optional<std::size_t> peak_memory_bytes;
  std::string memory_source;
};

struct BenchConfig {
  std::vector<double> min_utils;
  std::vector<double> min_cors;
  std::vector<BoundsMode> modes{BoundsMode::lu_su, BoundsMode::twu_only};
  KulcMode kulc_mode = KulcMode::prune;
  bool absolute_threshold = false;
  int repeat = 1;
};

/// Runs the cartesian product of thresholds and bounds modes, each repeated
/// config.repeat times; wall time is the median. Jobs run sequentially.
std::vector<BenchRow> run_bench(const Database& db,
                                const std::string& dataset_name,
                                const BenchConfig& config);

/// Aligned human-readable table.
std::string format_bench_table(const std::vector<BenchRow>& rows);

/// One self-describing key=value record per line.
std::string format_bench_records(const std::vector<BenchRow>& rows);

const char* to_string(BoundsMode mode);
const char* to_string(KulcMode mode);

/// Peak resident set size of this process, when the platform exposes it.
std::optional<std::size_t> peak_rss_bytes();

}  // namespace cohui
