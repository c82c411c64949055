#include "cohui/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace cohui {

namespace {

// Sampling is hand-rolled on top of the mt19937_64 stream: the standard
// distributions are implementation-defined, which would break byte-identical
// output across toolchains.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t bounded(std::uint64_t n) {
    std::uint64_t x, r;
    do {
      x = rng_();
      r = x % n;
    } while (x - r > std::numeric_limits<std::uint64_t>::max() - (n - 1));
    return r;
  }

  double unit() {  // uniform in [0,1)
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

std::string generate_spmf(const SynthSpec& spec) {
  if (spec.n_items < 1) throw std::invalid_argument("n_items must be at least 1");
  if (spec.avg_length < 1.0) {
    throw std::invalid_argument("avg_length must be at least 1");
  }
  if (spec.avg_length > static_cast<double>(spec.n_items)) {
    throw std::invalid_argument("avg_length exceeds n_items");
  }
  if (spec.max_item_utility < 1) {
    throw std::invalid_argument("max_item_utility must be at least 1");
  }

  const std::uint32_t m = spec.n_items;
  Sampler sampler(spec.seed);

  // Skewed popularity for the sparse profile; uniform for dense.
  std::vector<double> cumulative;
  if (spec.profile == DensityProfile::sparse) {
    cumulative.resize(m);
    double acc = 0.0;
    for (std::uint32_t i = 0; i < m; ++i) {
      acc += 1.0 / std::pow(static_cast<double>(i + 1), 1.2);
      cumulative[i] = acc;
    }
  }

  std::vector<std::uint32_t> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::uint32_t> picked;
  std::vector<std::uint8_t> used(m, 0);

  std::string out;
  out.reserve(static_cast<std::size_t>(
      static_cast<double>(spec.n_transactions) * (8.0 * spec.avg_length + 8.0)));

  for (std::uint64_t t = 0; t < spec.n_transactions; ++t) {
    // Length with exact mean avg_length: floor/ceil split plus a symmetric
    // jitter window small enough that clamping never occurs.
    std::uint32_t base = static_cast<std::uint32_t>(spec.avg_length);
    double frac = spec.avg_length - static_cast<double>(base);
    std::uint32_t len = base + (frac > 0.0 && sampler.unit() < frac ? 1 : 0);
    std::uint32_t lo_room = base - 1;
    std::uint32_t hi_room = m - std::min(m, base + (frac > 0.0 ? 1u : 0u));
    std::uint32_t w = std::min({2u, lo_room, hi_room});
    if (w > 0) {
      len = len - w + static_cast<std::uint32_t>(sampler.bounded(2 * w + 1));
    }

    picked.clear();
    if (spec.profile == DensityProfile::dense) {
      for (std::uint32_t k = 0; k < len; ++k) {
        std::uint32_t j =
            k + static_cast<std::uint32_t>(sampler.bounded(m - k));
        std::swap(pool[k], pool[j]);
        picked.push_back(pool[k]);
      }
    } else {
      for (std::uint32_t k = 0; k < len; ++k) {
        std::uint32_t idx;
        do {
          double u = sampler.unit() * cumulative.back();
          idx = static_cast<std::uint32_t>(
              std::lower_bound(cumulative.begin(), cumulative.end(), u) -
              cumulative.begin());
        } while (used[idx]);
        used[idx] = 1;
        picked.push_back(idx);
      }
      for (std::uint32_t idx : picked) used[idx] = 0;
    }
    std::sort(picked.begin(), picked.end());

    Money tu = 0;
    std::vector<Money> utils(picked.size());
    for (std::size_t k = 0; k < picked.size(); ++k) {
      utils[k] = 1 + static_cast<Money>(
                         sampler.bounded(static_cast<std::uint64_t>(spec.max_item_utility)));
      tu += utils[k];
    }

    for (std::size_t k = 0; k < picked.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(picked[k] + 1);  // item ids are 1-based
    }
    out += ':';
    out += std::to_string(tu);
    out += ':';
    for (std::size_t k = 0; k < utils.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(utils[k]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace cohui
