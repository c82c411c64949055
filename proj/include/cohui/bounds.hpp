#pragma once

#include <span>
#include <vector>

#include "cohui/projection.hpp"

namespace cohui {

/// Dense accumulator indexed by rank, reused across search nodes. reset()
/// zeroes only the bins touched since the previous reset.
class UtilityBinArray {
 public:
  UtilityBinArray() = default;
  explicit UtilityBinArray(std::size_t size)
      : bins_(size, 0), dirty_(size, 0) {}

  void reset();
  void add(Rank r, Money v);
  Money operator[](Rank r) const { return bins_[r]; }
  std::size_t size() const { return bins_.size(); }

 private:
  std::vector<Money> bins_;
  std::vector<std::uint8_t> dirty_;
  std::vector<Rank> touched_;
};

/// Local utility of the view's prefix w.r.t. every suffix item: each suffix
/// item's bin receives u(prefix,T) plus the utility of the whole suffix.
UtilityBinArray& compute_local_utility(const ProjectedView& view,
                                       UtilityBinArray& ua);

/// Subtree utility: each suffix item's bin receives u(prefix,T) plus its own
/// utility plus the utility of the items after it; one back-to-front pass
/// per row with a running tail sum.
UtilityBinArray& compute_subtree_utility(const ProjectedView& view,
                                         UtilityBinArray& ua);

struct NodePartition {
  std::vector<Rank> secondary;  // lu >= threshold
  std::vector<Rank> primary;    // su >= threshold; subset of secondary
};

/// Splits the candidate ranks by the two bounds. Throws std::logic_error if
/// any candidate has su > lu, which signals an accumulation bug.
NodePartition partition(const UtilityBinArray& lu, const UtilityBinArray& su,
                        std::span<const Rank> candidates, double threshold);

}  // namespace cohui
