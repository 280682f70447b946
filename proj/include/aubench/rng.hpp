#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace aubench {

namespace detail {
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

// Splitmix64 generator. The standard distributions are not bit-portable
// across library implementations, so all sampling helpers live here; every
// reproducibility contract in the project routes through this class.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return detail::mix64(state_);
  }

  // Uniform in [0, n). n must be > 0.
  uint64_t below(uint64_t n) {
    const uint64_t limit = n == 0 ? 0 : UINT64_MAX - UINT64_MAX % n;
    uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Standard normal via Box-Muller; consumes two draws per call.
  double normal() {
    double u1 = unit();
    while (u1 <= 0.0) u1 = unit();
    const double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  template <typename Vec>
  void shuffle(Vec& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(below(i));
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

  // Independent stream derivation; fold or seed parallelism must not perturb
  // the draws of sibling streams.
  static uint64_t derive(uint64_t seed, uint64_t stream) {
    return detail::mix64(seed ^ detail::mix64(stream + 0x9e3779b97f4a7c15ull));
  }

  Rng split(uint64_t stream) const { return Rng(derive(state_, stream)); }

 private:
  uint64_t state_;
};

}  // namespace aubench
