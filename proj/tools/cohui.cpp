#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cohui/bench.hpp"
#include "cohui/dataset.hpp"
#include "cohui/miner.hpp"
#include "cohui/oracle.hpp"
#include "cohui/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiff = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

cohui::KulcMode parse_kulc_mode(const std::string& s) {
  if (s == "prune") return cohui::KulcMode::prune;
  if (s == "postfilter") return cohui::KulcMode::postfilter;
  throw CLI::ValidationError("--kulc-mode", "expected 'prune' or 'postfilter'");
}

cohui::BoundsMode parse_bounds_mode(const std::string& s) {
  if (s == "lu-su") return cohui::BoundsMode::lu_su;
  if (s == "twu-only") return cohui::BoundsMode::twu_only;
  throw CLI::ValidationError("--bounds", "expected 'lu-su' or 'twu-only'");
}

bool write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << path << '\n';
    return false;
  }
  out << body;
  return out.good();
}

std::string stats_block(const cohui::MiningStats& stats) {
  std::ostringstream out;
  out << "candidates=" << stats.candidates << '\n'
      << "patterns=" << stats.patterns << '\n'
      << "kulc_pruned=" << stats.kulc_pruned << '\n'
      << "wall_time_ms=" << stats.wall_ms << '\n';
  if (stats.peak_memory_bytes) {
    out << "peak_memory_bytes=" << *stats.peak_memory_bytes << '\n'
        << "peak_memory_source=rusage_maxrss" << '\n';
  }
  return out.str();
}

struct MineArgs {
  std::string input;
  double min_util = 0.0;
  double min_cor = 0.0;
  bool absolute = false;
  std::string output;
  std::string stats_path;
  std::string kulc_mode = "prune";
  std::string bounds = "lu-su";
  std::optional<std::size_t> max_len;
};

int cmd_mine(const MineArgs& args) {
  try {
    cohui::Database db = cohui::load_database_file(args.input);

    cohui::MiningParams params;
    params.min_util = args.min_util;
    params.min_cor = args.min_cor;
    params.absolute_threshold = args.absolute;
    params.kulc_mode = parse_kulc_mode(args.kulc_mode);
    params.bounds_mode = parse_bounds_mode(args.bounds);
    params.max_pattern_length = args.max_len;

    cohui::MiningResult result = cohui::mine(db, params);
    result.stats.peak_memory_bytes = cohui::peak_rss_bytes();

    std::string body;
    for (const cohui::Pattern& p : result.records) {
      body += cohui::format_pattern_line(p.items, p.utility, p.support, p.kulc);
      body += '\n';
    }
    if (args.output.empty()) {
      std::cout << body;
    } else if (!write_file(args.output, body)) {
      return kExitInput;
    }
    if (!args.stats_path.empty() &&
        !write_file(args.stats_path, stats_block(result.stats))) {
      return kExitInput;
    }
    return kExitOk;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  }
}

struct VerifyArgs {
  std::string input;
  double min_util = 0.0;
  double min_cor = 0.0;
  bool absolute = false;
  std::size_t max_items = 20;
  std::optional<std::size_t> max_len;
  std::string kulc_mode = "prune";
};

int cmd_verify(const VerifyArgs& args) {
  try {
    cohui::Database db = cohui::load_database_file(args.input);

    cohui::MiningParams params;
    params.min_util = args.min_util;
    params.min_cor = args.min_cor;
    params.absolute_threshold = args.absolute;
    params.kulc_mode = parse_kulc_mode(args.kulc_mode);
    params.max_pattern_length = args.max_len;

    cohui::OracleCaps caps;
    caps.max_items = args.max_items;
    caps.max_length = args.max_len;

    cohui::OracleResult reference = cohui::enumerate_all(db, params, caps);
    cohui::MiningResult mined = cohui::mine(db, params);
    cohui::DiffReport diff = cohui::compare(mined.records, reference);

    if (diff.empty()) {
      std::cout << "results match the exhaustive reference ("
                << reference.records.size() << " patterns, "
                << reference.enumerated << " itemsets evaluated)\n";
      return kExitOk;
    }
    std::cout << diff.to_string();
    if (params.kulc_mode == cohui::KulcMode::prune && diff.spurious.empty() &&
        diff.mismatches.empty()) {
      cohui::MiningParams post = params;
      post.kulc_mode = cohui::KulcMode::postfilter;
      cohui::MiningResult full = cohui::mine(db, post);
      cohui::PruneAudit audit =
          cohui::audit_prune_losses(db, params, full.records, mined.records);
      for (const cohui::PruneLoss& loss : audit.losses) {
        std::cout << "correlation-prune loss:";
        for (auto item : loss.items) std::cout << ' ' << item;
        if (!loss.blocking_prefix.empty()) {
          std::cout << "  blocked by prefix";
          for (auto item : loss.blocking_prefix) std::cout << ' ' << item;
          std::cout << " (kulc " << loss.prefix_kulc << " < " << args.min_cor
                    << ", pattern kulc " << loss.pattern_kulc << ")";
        } else {
          std::cout << "  UNEXPLAINED";
        }
        std::cout << '\n';
      }
    }
    return kExitDiff;
  } catch (const cohui::CapError& e) {
    std::cerr << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  }
}

struct BenchArgs {
  std::string input;
  std::vector<double> min_utils;
  std::vector<double> min_cors;
  std::vector<std::string> modes{"lu-su", "twu-only"};
  std::string kulc_mode = "prune";
  bool absolute = false;
  int repeat = 1;
  std::string report;
};

int cmd_bench(const BenchArgs& args) {
  try {
    cohui::Database db = cohui::load_database_file(args.input);

    cohui::BenchConfig config;
    config.min_utils = args.min_utils;
    config.min_cors = args.min_cors;
    config.modes.clear();
    for (const std::string& m : args.modes) {
      config.modes.push_back(parse_bounds_mode(m));
    }
    config.kulc_mode = parse_kulc_mode(args.kulc_mode);
    config.absolute_threshold = args.absolute;
    config.repeat = args.repeat;

    std::vector<cohui::BenchRow> rows =
        cohui::run_bench(db, args.input, config);
    std::cout << cohui::format_bench_table(rows);
    if (!args.report.empty() &&
        !write_file(args.report, cohui::format_bench_records(rows))) {
      return kExitInput;
    }
    return kExitOk;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  }
}

struct GenArgs {
  std::string out;
  std::uint64_t trans = 0;
  std::uint32_t items = 0;
  double avg_len = 0.0;
  std::uint64_t seed = 0;
  std::string profile = "sparse";
  cohui::Money max_util = 10;
};

int cmd_gen(const GenArgs& args) {
  try {
    cohui::SynthSpec spec;
    spec.n_transactions = args.trans;
    spec.n_items = args.items;
    spec.avg_length = args.avg_len;
    spec.seed = args.seed;
    spec.max_item_utility = args.max_util;
    if (args.profile == "sparse") {
      spec.profile = cohui::DensityProfile::sparse;
    } else if (args.profile == "dense") {
      spec.profile = cohui::DensityProfile::dense;
    } else {
      std::cerr << "--profile: expected 'sparse' or 'dense'\n";
      return kExitInput;
    }
    std::string body = cohui::generate_spmf(spec);
    if (!write_file(args.out, body)) return kExitInput;
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlated high-utility itemset miner"};
  app.require_subcommand(1);

  MineArgs mine_args;
  auto* mine_cmd = app.add_subcommand("mine", "Mine correlated high-utility itemsets");
  mine_cmd->add_option("--input", mine_args.input, "Input dataset")->required();
  mine_cmd->add_option("--min-util", mine_args.min_util, "Minimum utility threshold")->required();
  mine_cmd->add_option("--min-cor", mine_args.min_cor, "Minimum correlation threshold")->required();
  mine_cmd->add_flag("--absolute", mine_args.absolute, "Treat --min-util as absolute utility");
  mine_cmd->add_option("--output", mine_args.output, "Pattern output file (default: stdout)");
  mine_cmd->add_option("--stats", mine_args.stats_path, "Stats output file");
  mine_cmd->add_option("--kulc-mode", mine_args.kulc_mode, "prune|postfilter")
      ->check(CLI::IsMember({"prune", "postfilter"}));
  mine_cmd->add_option("--bounds", mine_args.bounds, "lu-su|twu-only")
      ->check(CLI::IsMember({"lu-su", "twu-only"}));
  mine_cmd->add_option("--max-len", mine_args.max_len, "Maximum pattern length");

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check the miner against exhaustive enumeration");
  verify_cmd->add_option("--input", verify_args.input, "Input dataset")->required();
  verify_cmd->add_option("--min-util", verify_args.min_util, "Minimum utility threshold")->required();
  verify_cmd->add_option("--min-cor", verify_args.min_cor, "Minimum correlation threshold")->required();
  verify_cmd->add_flag("--absolute", verify_args.absolute, "Treat --min-util as absolute utility");
  verify_cmd->add_option("--max-items", verify_args.max_items, "Item cap for enumeration");
  verify_cmd->add_option("--max-len", verify_args.max_len, "Maximum pattern length");
  verify_cmd->add_option("--kulc-mode", verify_args.kulc_mode, "prune|postfilter")
      ->check(CLI::IsMember({"prune", "postfilter"}));

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark threshold/mode combinations");
  bench_cmd->add_option("--input", bench_args.input, "Input dataset")->required();
  bench_cmd->add_option("--min-util-list", bench_args.min_utils, "Utility thresholds")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--min-cor-list", bench_args.min_cors, "Correlation thresholds")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--modes", bench_args.modes, "Bounds modes to compare")
      ->delimiter(',');
  bench_cmd->add_option("--kulc-mode", bench_args.kulc_mode, "prune|postfilter")
      ->check(CLI::IsMember({"prune", "postfilter"}));
  bench_cmd->add_flag("--absolute", bench_args.absolute, "Treat thresholds as absolute utility");
  bench_cmd->add_option("--repeat", bench_args.repeat, "Repetitions per configuration")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--report", bench_args.report, "Structured report file");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic dataset");
  gen_cmd->add_option("--out", gen_args.out, "Output file")->required();
  gen_cmd->add_option("--trans", gen_args.trans, "Number of transactions")->required();
  gen_cmd->add_option("--items", gen_args.items, "Number of distinct items")->required();
  gen_cmd->add_option("--avg-len", gen_args.avg_len, "Average transaction length")->required();
  gen_cmd->add_option("--seed", gen_args.seed, "Random seed")->required();
  gen_cmd->add_option("--profile", gen_args.profile, "sparse|dense")
      ->check(CLI::IsMember({"sparse", "dense"}));
  gen_cmd->add_option("--max-util", gen_args.max_util, "Maximum per-item utility");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (mine_cmd->parsed()) return cmd_mine(mine_args);
  if (verify_cmd->parsed()) return cmd_verify(verify_args);
  if (bench_cmd->parsed()) return cmd_bench(bench_args);
  if (gen_cmd->parsed()) return cmd_gen(gen_args);
  return kExitInput;
}
