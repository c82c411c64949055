#include "cohui/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace cohui {

namespace {

constexpr double kKulcTolerance = 1e-9;

// Deliberately naive and separate from the mining kernels: one full pass
// over the database per evaluated itemset.
struct Evaluation {
  Money utility = 0;
  Count support = 0;
};

Evaluation evaluate(const std::vector<ItemId>& items, const Database& db) {
  Evaluation ev;
  for (const Transaction& tx : db.transactions) {
    Money sum = 0;
    std::size_t found = 0;
    for (ItemId wanted : items) {
      for (const ItemUtility& e : tx.entries) {
        if (e.item == wanted) {
          sum += e.utility;
          ++found;
          break;
        }
      }
    }
    if (found == items.size()) {
      ev.utility += sum;
      ev.support += 1;
    }
  }
  return ev;
}

std::string items_to_string(const std::vector<ItemId>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(items[i]);
  }
  out += '}';
  return out;
}

}  // namespace

OracleResult enumerate_all(const Database& db, const MiningParams& params,
                           const OracleCaps& caps) {
  if (params.min_util < 0.0 ||
      (!params.absolute_threshold && params.min_util > 1.0) ||
      params.min_cor < 0.0 || params.min_cor > 1.0) {
    throw std::invalid_argument("invalid thresholds");
  }
  if (caps.max_length && *caps.max_length == 0) {
    throw std::invalid_argument("max_length must be at least 1");
  }

  std::set<ItemId> present;
  for (const Transaction& tx : db.transactions) {
    for (const ItemUtility& e : tx.entries) present.insert(e.item);
  }
  std::vector<ItemId> items(present.begin(), present.end());

  if (!caps.max_length && items.size() > caps.max_items) {
    throw CapError("refusing to enumerate " + std::to_string(items.size()) +
                   " items without a length cap (limit " +
                   std::to_string(caps.max_items) + ")");
  }

  double threshold = params.absolute_threshold
                         ? params.min_util
                         : params.min_util * static_cast<double>(db.total_utility);
  std::size_t max_len = caps.max_length.value_or(items.size());
  if (params.max_pattern_length) {
    max_len = std::min(max_len, *params.max_pattern_length);
  }

  std::map<ItemId, Count> singleton_support;
  for (const Transaction& tx : db.transactions) {
    for (const ItemUtility& e : tx.entries) singleton_support[e.item] += 1;
  }

  OracleResult result;
  std::vector<ItemId> current;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t idx = start; idx < items.size(); ++idx) {
      current.push_back(items[idx]);
      ++result.enumerated;
      Evaluation ev = evaluate(current, db);
      if (ev.support > 0 && static_cast<double>(ev.utility) >= threshold) {
        double sum = 0.0;
        for (ItemId i : current) {
          sum += static_cast<double>(ev.support) /
                 static_cast<double>(singleton_support.at(i));
        }
        double k = sum / static_cast<double>(current.size());
        if (k >= params.min_cor) {
          result.records.push_back({current, ev.utility, ev.support, k});
        }
      }
      if (current.size() < max_len) self(self, idx + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);

  std::sort(result.records.begin(), result.records.end(), pattern_order);
  return result;
}

DiffReport compare(const std::vector<Pattern>& mined,
                   const OracleResult& reference) {
  DiffReport report;
  std::size_t i = 0, j = 0;
  const auto& ref = reference.records;
  while (i < mined.size() || j < ref.size()) {
    if (j == ref.size() ||
        (i < mined.size() && pattern_order(mined[i], ref[j]))) {
      report.spurious.push_back(mined[i].items);
      ++i;
    } else if (i == mined.size() || pattern_order(ref[j], mined[i])) {
      report.missing.push_back(ref[j].items);
      ++j;
    } else {
      const Pattern& a = mined[i];
      const Pattern& b = ref[j];
      if (a.utility != b.utility || a.support != b.support ||
          std::abs(a.kulc - b.kulc) > kKulcTolerance) {
        report.mismatches.push_back({a.items, a.utility, b.utility, a.support,
                                     b.support, a.kulc, b.kulc});
      }
      ++i;
      ++j;
    }
  }
  return report;
}

std::string DiffReport::to_string() const {
  std::ostringstream out;
  if (empty()) {
    out << "results match\n";
    return out.str();
  }
  for (const auto& items : missing) {
    out << "missing " << items_to_string(items) << '\n';
  }
  for (const auto& items : spurious) {
    out << "spurious " << items_to_string(items) << '\n';
  }
  for (const ValueMismatch& m : mismatches) {
    out << "mismatch " << items_to_string(m.items) << " utility "
        << m.utility_mined << "/" << m.utility_ref << " support "
        << m.support_mined << "/" << m.support_ref << " kulc " << m.kulc_mined
        << "/" << m.kulc_ref << '\n';
  }
  return out.str();
}

PruneAudit audit_prune_losses(const Database& db, const MiningParams& params,
                              const std::vector<Pattern>& postfilter,
                              const std::vector<Pattern>& pruned) {
  PruneAudit audit;

  std::set<std::vector<ItemId>> pruned_sets;
  for (const Pattern& p : pruned) pruned_sets.insert(p.items);

  // Search order: TWU ascending, ties by id (computed here independently).
  std::map<ItemId, Money> twu;
  std::map<ItemId, Count> support;
  for (const Transaction& tx : db.transactions) {
    for (const ItemUtility& e : tx.entries) {
      twu[e.item] += tx.tu;
      support[e.item] += 1;
    }
  }

  for (const Pattern& p : postfilter) {
    if (pruned_sets.count(p.items)) continue;
    PruneLoss loss;
    loss.items = p.items;
    loss.pattern_kulc = p.kulc;

    std::vector<ItemId> ordered = p.items;
    std::sort(ordered.begin(), ordered.end(), [&](ItemId a, ItemId b) {
      if (twu[a] != twu[b]) return twu[a] < twu[b];
      return a < b;
    });
    for (std::size_t len = 1; len + 1 <= ordered.size(); ++len) {
      std::vector<ItemId> prefix(ordered.begin(), ordered.begin() + len);
      Count sup = itemset_support(prefix, db);
      double sum = 0.0;
      for (ItemId i : prefix) {
        sum += static_cast<double>(sup) / static_cast<double>(support.at(i));
      }
      double k = sum / static_cast<double>(prefix.size());
      if (k < params.min_cor) {
        std::sort(prefix.begin(), prefix.end());
        loss.blocking_prefix = prefix;
        loss.prefix_kulc = k;
        break;
      }
    }
    if (loss.blocking_prefix.empty()) audit.all_explained = false;
    audit.losses.push_back(std::move(loss));
  }
  return audit;
}

}  // namespace cohui
