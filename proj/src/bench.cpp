#include "cohui/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/resource.h>
#endif

namespace cohui {

const char* to_string(BoundsMode mode) {
  return mode == BoundsMode::lu_su ? "lu-su" : "twu-only";
}

const char* to_string(KulcMode mode) {
  return mode == KulcMode::prune ? "prune" : "postfilter";
}

std::optional<std::size_t> peak_rss_bytes() {
#if defined(__unix__) || defined(__APPLE__)
  struct rusage usage {};
  if (getrusage(RUSAGE_SELF, &usage) == 0 && usage.ru_maxrss > 0) {
#if defined(__APPLE__)
    return static_cast<std::size_t>(usage.ru_maxrss);  // bytes
#else
    return static_cast<std::size_t>(usage.ru_maxrss) * 1024;  // kilobytes
#endif
  }
#endif
  return std::nullopt;
}

std::vector<BenchRow> run_bench(const Database& db,
                                const std::string& dataset_name,
                                const BenchConfig& config) {
  std::vector<BenchRow> rows;
  int repeat = std::max(1, config.repeat);
  for (double min_util : config.min_utils) {
    for (double min_cor : config.min_cors) {
      for (BoundsMode mode : config.modes) {
        MiningParams params;
        params.min_util = min_util;
        params.min_cor = min_cor;
        params.absolute_threshold = config.absolute_threshold;
        params.kulc_mode = config.kulc_mode;
        params.bounds_mode = mode;

        std::vector<double> times;
        MiningResult result;
        for (int r = 0; r < repeat; ++r) {
          result = mine(db, params);
          times.push_back(result.stats.wall_ms);
        }
        std::sort(times.begin(), times.end());
        double median = times.size() % 2 == 1
                            ? times[times.size() / 2]
                            : 0.5 * (times[times.size() / 2 - 1] +
                                     times[times.size() / 2]);

        BenchRow row;
        row.dataset = dataset_name;
        row.min_util = min_util;
        row.min_cor = min_cor;
        row.bounds_mode = mode;
        row.kulc_mode = config.kulc_mode;
        row.candidates = result.stats.candidates;
        row.patterns = result.stats.patterns;
        row.wall_ms = median;
        row.peak_memory_bytes = peak_rss_bytes();
        row.memory_source = row.peak_memory_bytes ? "rusage_maxrss" : "";
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-20s %9s %8s %9s %11s %12s %10s %12s\n",
                "dataset", "min_util", "min_cor", "bounds", "kulc",
                "candidates", "patterns", "wall_ms");
  out += line;
  for (const BenchRow& r : rows) {
    std::snprintf(line, sizeof(line),
                  "%-20s %9.4f %8.4f %9s %11s %12llu %10llu %12.3f\n",
                  r.dataset.c_str(), r.min_util, r.min_cor,
                  to_string(r.bounds_mode), to_string(r.kulc_mode),
                  static_cast<unsigned long long>(r.candidates),
                  static_cast<unsigned long long>(r.patterns), r.wall_ms);
    out += line;
  }
  return out;
}

std::string format_bench_records(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  for (const BenchRow& r : rows) {
    out << "dataset=" << r.dataset << " min_util=" << r.min_util
        << " min_cor=" << r.min_cor << " bounds=" << to_string(r.bounds_mode)
        << " kulc=" << to_string(r.kulc_mode)
        << " candidates=" << r.candidates << " patterns=" << r.patterns
        << " wall_ms=" << r.wall_ms;
    if (r.peak_memory_bytes) {
      out << " peak_memory_bytes=" << *r.peak_memory_bytes
          << " peak_memory_source=" << r.memory_source;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cohui
