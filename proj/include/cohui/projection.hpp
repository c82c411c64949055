#pragma once

#include <span>
#include <vector>

#include "cohui/preprocess.hpp"

namespace cohui {

struct ProjectedRow {
  std::uint32_t tx = 0;        // transaction index in the base database
  std::uint32_t offset = 0;    // absolute index of the first suffix entry
  Money prefix_utility = 0;    // u(prefix itemset, T)
};

/// An offset-based view of the transactions containing the current prefix.
/// Rows keep the base transaction order; no entries are copied.
struct ProjectedView {
  const OrderedDatabase* base = nullptr;
  std::vector<ProjectedRow> rows;
  std::uint32_t depth = 0;  // number of prefix items

  std::span<const RankedEntry> suffix(const ProjectedRow& row) const {
    return {base->entries.data() + row.offset,
            base->entries.data() + base->tx_begin[row.tx + 1]};
  }
};

/// The empty-prefix view: one row per transaction, prefix utility zero.
ProjectedView root_view(const OrderedDatabase& odb);

struct Extension {
  ProjectedView view;
  Money utility = 0;  // u(prefix + z)
  Count support = 0;  // sup(prefix + z)
};

/// Narrows the view to the rows whose suffix contains z, advancing each
/// offset past z and adding u(z,T) to the prefix utility. Also returns the
/// utility and support of the extended itemset.
Extension extend(const ProjectedView& view, Rank z);

/// Iteration kernel: per row, calls on_row(prefix_utility) once, then
/// on_entry(rank, utility) for each suffix entry in rank order. on_entry
/// returns false to stop scanning the current row.
template <typename RowFn, typename EntryFn>
void suffix_scan(const ProjectedView& view, RowFn&& on_row, EntryFn&& on_entry) {
  for (const ProjectedRow& row : view.rows) {
    on_row(row.prefix_utility);
    for (const RankedEntry& e : view.suffix(row)) {
      if (!on_entry(e.rank, e.utility)) break;
    }
  }
}

}  // namespace cohui
