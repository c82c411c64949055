#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cohui {

using Money = std::int64_t;
using ItemId = std::uint32_t;
using Count = std::int64_t;

/// One (item, utility) entry of a transaction. The utility is the full
/// utility of the item in that transaction (quantity x unit profit,
/// pre-multiplied as in the standard transaction-utility text format).
struct ItemUtility {
  ItemId item = 0;
  Money utility = 0;
};

struct Transaction {
  std::uint32_t tid = 0;
  std::vector<ItemUtility> entries;  // distinct items, file order
  Money tu = 0;                      // sum of entry utilities
};

struct Database {
  std::vector<Transaction> transactions;
  Money total_utility = 0;

  std::size_t size() const { return transactions.size(); }
  bool empty() const { return transactions.empty(); }
};

struct LoadOptions {
  /// Recompute the transaction utility from the per-item utilities instead
  /// of rejecting lines whose declared value disagrees with their sum.
  bool trust_sum = false;
  /// Merge duplicate items within a line by summing their utilities
  /// instead of rejecting the line.
  bool merge_duplicates = false;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

/// Parses one line of the transaction-utility text format:
///   <item>( <item>)*:<TU>:<util>( <util>)*
Transaction parse_spmf_line(std::string_view line, std::uint32_t tid,
                            const LoadOptions& options = {});

/// Reads a whole database, one transaction per non-blank line. Tids are
/// assigned sequentially starting at 1.
Database load_database(std::istream& in, const LoadOptions& options = {});
Database load_database_file(const std::string& path,
                            const LoadOptions& options = {});

/// Writes the canonical text form (inverse of load_database; item order
/// within a line is preserved as loaded).
void serialize_database(const Database& db, std::ostream& out);

/// u(X): total utility of X over all transactions containing X.
Money itemset_utility(const std::vector<ItemId>& items, const Database& db);

/// sup(X): number of transactions containing every item of X.
Count itemset_support(const std::vector<ItemId>& items, const Database& db);

/// Canonical output line: items in ascending id, then utility, support and
/// the correlation value with four decimal digits.
std::string format_pattern_line(const std::vector<ItemId>& items,
                                Money utility, Count support, double kulc);

}  // namespace cohui
