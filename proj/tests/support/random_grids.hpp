#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "monoindex/grid_function.hpp"

namespace monoindex::testing {

/// Seeded source of random grid functions for property tests.
class RandomGrids {
 public:
  explicit RandomGrids(std::uint64_t seed) : rng_(seed) {}

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Values in [lo, hi]. Mixes in shapes the plain uniform case rarely hits:
  /// sorted runs, heavy ties, and reversed runs.
  GridFunctiond grid(std::size_t n, double lo = -10, double hi = 10) {
    std::vector<double> v(n);
    const int shape = std::uniform_int_distribution<int>(0, 5)(rng_);
    for (auto& x : v) x = uniform(lo, hi);
    switch (shape) {
      case 0: std::sort(v.begin(), v.end()); break;
      case 1:
        for (auto& x : v) x = std::round(x / 4) * 4;  // few distinct levels
        break;
      case 2: std::sort(v.begin(), v.end(), std::greater<>()); break;
      case 3: {
        // sorted except for one swapped pair
        std::sort(v.begin(), v.end());
        if (n > 1) std::swap(v[size(0, n - 1)], v[size(0, n - 1)]);
        break;
      }
      default: break;
    }
    return GridFunctiond::from_values(std::span<const double>(v));
  }

  GridFunctiond grid(std::size_t n_lo, std::size_t n_hi, double lo, double hi) {
    return grid(size(n_lo, n_hi), lo, hi);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Applies one of several non-decreasing maps, picked at random, to the base values.
inline GridFunctiond monotone_transform(const GridFunctiond& base, RandomGrids& rnd) {
  const int which = static_cast<int>(rnd.size(0, 4));
  const double a = rnd.uniform(0, 3);
  const double b = rnd.uniform(-5, 5);
  GridFunctiond::Array out = base.values();
  for (auto& x : out) {
    switch (which) {
      case 0: x = a * x + b; break;
      case 1: x = std::tanh(x / 3) * (1 + a); break;
      case 2: x = std::floor(x) + b; break;      // step map, introduces ties
      case 3: x = x * x * x / 100 + b; break;
      default: x = std::exp(x / 5) - a; break;
    }
  }
  return GridFunctiond(std::move(out), base.domain_length(), base.sample_rule());
}

}  // namespace monoindex::testing
