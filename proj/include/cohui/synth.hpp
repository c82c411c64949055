#pragma once

#include <cstdint>
#include <string>

#include "cohui/dataset.hpp"

namespace cohui {

enum class DensityProfile { sparse, dense };

/// Synthetic dataset description. Output is deterministic for a fixed seed,
/// byte for byte.
struct SynthSpec {
  std::uint64_t n_transactions = 0;
  std::uint32_t n_items = 0;
  double avg_length = 0.0;
  Money max_item_utility = 10;
  std::uint64_t seed = 0;
  DensityProfile profile = DensityProfile::sparse;
};

/// Generates a transaction-utility text file body. Transaction lengths
/// average avg_length; the sparse profile skews item popularity, the dense
/// profile draws items uniformly. Throws std::invalid_argument when
/// avg_length exceeds n_items or a field is out of range.
std::string generate_spmf(const SynthSpec& spec);

}  // namespace cohui
