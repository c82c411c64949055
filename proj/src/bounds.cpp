#include "cohui/bounds.hpp"

#include <stdexcept>
#include <string>

namespace cohui {

void UtilityBinArray::reset() {
  for (Rank r : touched_) {
    bins_[r] = 0;
    dirty_[r] = 0;
  }
  touched_.clear();
}

void UtilityBinArray::add(Rank r, Money v) {
  if (!dirty_[r]) {
    dirty_[r] = 1;
    touched_.push_back(r);
  }
  bins_[r] += v;
}

UtilityBinArray& compute_local_utility(const ProjectedView& view,
                                       UtilityBinArray& ua) {
  ua.reset();
  for (const ProjectedRow& row : view.rows) {
    auto sfx = view.suffix(row);
    Money remaining = 0;
    for (const RankedEntry& e : sfx) remaining += e.utility;
    Money add = row.prefix_utility + remaining;
    for (const RankedEntry& e : sfx) ua.add(e.rank, add);
  }
  return ua;
}

UtilityBinArray& compute_subtree_utility(const ProjectedView& view,
                                         UtilityBinArray& ua) {
  ua.reset();
  for (const ProjectedRow& row : view.rows) {
    auto sfx = view.suffix(row);
    Money tail = 0;
    for (std::size_t j = sfx.size(); j-- > 0;) {
      ua.add(sfx[j].rank, row.prefix_utility + sfx[j].utility + tail);
      tail += sfx[j].utility;
    }
  }
  return ua;
}

NodePartition partition(const UtilityBinArray& lu, const UtilityBinArray& su,
                        std::span<const Rank> candidates, double threshold) {
  NodePartition part;
  for (Rank r : candidates) {
    if (su[r] > lu[r]) {
      throw std::logic_error("subtree utility exceeds local utility for rank " +
                             std::to_string(r));
    }
    if (static_cast<double>(lu[r]) >= threshold) part.secondary.push_back(r);
    if (static_cast<double>(su[r]) >= threshold) part.primary.push_back(r);
  }
  return part;
}

}  // namespace cohui
