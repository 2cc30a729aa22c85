#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace scx {

/// Seeded generator with fixed sampling algorithms, so identical seeds give
/// identical streams on every platform. The raw engine is std::mt19937_64;
/// the uniform/discrete samplers below are spelled out instead of relying on
/// the (implementation-defined) standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform in {0, ..., n-1} without modulo bias.
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_int: n must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Index sample from a cumulative weight array (last entry = total mass).
  std::size_t from_cumulative(const std::vector<double>& cumulative) {
    const double u = uniform01() * cumulative.back();
    std::size_t lo = 0, hi = cumulative.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (u < cumulative[mid]) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  }

  /// First k entries of a uniformly shuffled {0..n-1} (partial Fisher-Yates).
  std::vector<int> sample_indices(int n, int k) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = 0; i < k && i < n; ++i) {
      const int j = i + static_cast<int>(uniform_int(n - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace scx
