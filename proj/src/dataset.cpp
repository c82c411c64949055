#include "cohui/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace cohui {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view field) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < field.size()) {
    while (i < field.size() && field[i] == ' ') ++i;
    std::size_t j = i;
    while (j < field.size() && field[j] != ' ') ++j;
    if (j > i) out.push_back(field.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_int(std::string_view token, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line),
      message_(message) {}

Transaction parse_spmf_line(std::string_view line, std::uint32_t tid,
                            const LoadOptions& options) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

  auto fields = split(line, ':');
  if (fields.size() != 3) {
    throw ParseError(tid, "expected 3 colon-separated fields, got " +
                              std::to_string(fields.size()));
  }
  auto item_tokens = tokens(fields[0]);
  auto util_tokens = tokens(fields[2]);
  if (item_tokens.empty()) throw ParseError(tid, "no items");
  if (item_tokens.size() != util_tokens.size()) {
    throw ParseError(tid, "item/utility count mismatch (" +
                              std::to_string(item_tokens.size()) + " vs " +
                              std::to_string(util_tokens.size()) + ")");
  }

  Transaction tx;
  tx.tid = tid;
  tx.entries.reserve(item_tokens.size());
  Money sum = 0;
  for (std::size_t i = 0; i < item_tokens.size(); ++i) {
    ItemId item = parse_int<ItemId>(item_tokens[i], tid, "item id");
    Money util = parse_int<Money>(util_tokens[i], tid, "utility");
    if (util < 0) throw ParseError(tid, "negative utility");
    auto dup = std::find_if(tx.entries.begin(), tx.entries.end(),
                            [&](const ItemUtility& e) { return e.item == item; });
    if (dup != tx.entries.end()) {
      if (!options.merge_duplicates) {
        throw ParseError(tid, "duplicate item " + std::to_string(item));
      }
      dup->utility += util;
    } else {
      tx.entries.push_back({item, util});
    }
    sum += util;
  }

  auto tu_tokens = tokens(fields[1]);
  if (tu_tokens.size() != 1) throw ParseError(tid, "malformed transaction utility field");
  Money declared = parse_int<Money>(tu_tokens[0], tid, "transaction utility");
  if (declared != sum && !options.trust_sum) {
    throw ParseError(tid, "declared utility " + std::to_string(declared) +
                              " != sum of item utilities " + std::to_string(sum));
  }
  tx.tu = sum;
  return tx;
}

Database load_database(std::istream& in, const LoadOptions& options) {
  Database db;
  std::string line;
  std::size_t line_no = 0;
  std::uint32_t tid = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (view.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    ++tid;
    try {
      db.transactions.push_back(parse_spmf_line(view, tid, options));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.message());
    }
    db.total_utility += db.transactions.back().tu;
  }
  return db;
}

Database load_database_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return load_database(in, options);
}

void serialize_database(const Database& db, std::ostream& out) {
  for (const Transaction& tx : db.transactions) {
    for (std::size_t i = 0; i < tx.entries.size(); ++i) {
      if (i) out << ' ';
      out << tx.entries[i].item;
    }
    out << ':' << tx.tu << ':';
    for (std::size_t i = 0; i < tx.entries.size(); ++i) {
      if (i) out << ' ';
      out << tx.entries[i].utility;
    }
    out << '\n';
  }
}

namespace {

// Returns the utility of `items` in tx, or -1 when tx does not contain them all.
Money utility_in(const std::vector<ItemId>& items, const Transaction& tx) {
  Money sum = 0;
  for (ItemId wanted : items) {
    bool found = false;
    for (const ItemUtility& e : tx.entries) {
      if (e.item == wanted) {
        sum += e.utility;
        found = true;
        break;
      }
    }
    if (!found) return -1;
  }
  return sum;
}

}  // namespace

Money itemset_utility(const std::vector<ItemId>& items, const Database& db) {
  if (items.empty()) throw std::invalid_argument("empty itemset");
  Money total = 0;
  for (const Transaction& tx : db.transactions) {
    Money u = utility_in(items, tx);
    if (u >= 0) total += u;
  }
  return total;
}

Count itemset_support(const std::vector<ItemId>& items, const Database& db) {
  if (items.empty()) throw std::invalid_argument("empty itemset");
  Count n = 0;
  for (const Transaction& tx : db.transactions) {
    if (utility_in(items, tx) >= 0) ++n;
  }
  return n;
}

std::string format_pattern_line(const std::vector<ItemId>& items,
                                Money utility, Count support, double kulc) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(items[i]);
  }
  char tail[96];
  std::snprintf(tail, sizeof(tail), " #UTIL: %lld #SUP: %lld #KULC: %.4f",
                static_cast<long long>(utility), static_cast<long long>(support),
                kulc);
  out += tail;
  return out;
}

}  // namespace cohui
