#include "cohui/projection.hpp"

namespace cohui {

ProjectedView root_view(const OrderedDatabase& odb) {
  ProjectedView view;
  view.base = &odb;
  view.depth = 0;
  view.rows.reserve(odb.transaction_count());
  for (std::uint32_t t = 0; t < odb.transaction_count(); ++t) {
    view.rows.push_back({t, odb.tx_begin[t], 0});
  }
  return view;
}

Extension extend(const ProjectedView& view, Rank z) {
  Extension ext;
  ext.view.base = view.base;
  ext.view.depth = view.depth + 1;
  const OrderedDatabase& base = *view.base;
  for (const ProjectedRow& row : view.rows) {
    std::uint32_t end = base.tx_begin[row.tx + 1];
    for (std::uint32_t k = row.offset; k < end; ++k) {
      Rank r = base.entries[k].rank;
      if (r > z) break;  // suffixes are rank-sorted
      if (r == z) {
        Money prefix = row.prefix_utility + base.entries[k].utility;
        ext.view.rows.push_back({row.tx, k + 1, prefix});
        ext.utility += prefix;
        ext.support += 1;
        break;
      }
    }
  }
  return ext;
}

}  // namespace cohui
