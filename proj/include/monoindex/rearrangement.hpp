#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <stdexcept>

#include "monoindex/grid_function.hpp"
#include "monoindex/summation.hpp"

namespace monoindex {

/// Non-decreasing rearrangement of a grid function: its samples in ascending order.
template <std::floating_point Scalar>
struct Rearrangement {
  ArrayX<Scalar> sorted_values;
  std::size_t source_n = 0;
  Scalar domain_length = Scalar(1);

  [[nodiscard]] std::size_t size() const noexcept { return source_n; }
  Scalar operator[](std::size_t i) const {
    return sorted_values[static_cast<Eigen::Index>(i)];
  }
};

/**
 * Cumulative integrals on the grid nodes k*M/n, k = 0..n:
 *
 *   H[k] = (M/n) * sum_{i<=k} tau_i        integral of the step function
 *   C[k] = (M/n) * sum_{i<=k} tau_{i:n}    integral of its rearrangement
 *
 * C is the convex rearrangement of H. Each prefix sum is correctly rounded,
 * so H[k] >= C[k] and H[n] == C[n] hold exactly, not just up to rounding.
 */
template <std::floating_point Scalar>
struct CumulativePair {
  ArrayX<Scalar> H;
  ArrayX<Scalar> C;
  Scalar domain_length = Scalar(1);

  [[nodiscard]] std::size_t cells() const noexcept {
    return static_cast<std::size_t>(H.size()) - 1;
  }
};

/// Stable ascending sort of the samples.
template <std::floating_point Scalar>
Rearrangement<Scalar> rearrange(const GridFunction<Scalar>& g) {
  Rearrangement<Scalar> r;
  r.sorted_values = g.values();
  std::stable_sort(r.sorted_values.data(), r.sorted_values.data() + r.sorted_values.size());
  r.source_n = g.size();
  r.domain_length = g.domain_length();
  return r;
}

/// Fraction of cells with tau_i <= x, i.e. the distribution function of the step function.
template <std::floating_point Scalar>
Scalar distribution(const GridFunction<Scalar>& g, Scalar x) {
  if (!std::isfinite(x)) throw std::invalid_argument("distribution: x must be finite");
  const auto count = (g.values() <= x).count();
  return static_cast<Scalar>(count) / static_cast<Scalar>(g.size());
}

template <std::floating_point Scalar>
Scalar distribution(const Rearrangement<Scalar>& r, Scalar x) {
  if (!std::isfinite(x)) throw std::invalid_argument("distribution: x must be finite");
  const auto* first = r.sorted_values.data();
  const auto* last = first + r.sorted_values.size();
  const auto count = std::upper_bound(first, last, x) - first;
  return static_cast<Scalar>(count) / static_cast<Scalar>(r.size());
}

/// Generalized inverse of the distribution: sorted value of the cell ((i-1)/n, i/n] holding t.
template <std::floating_point Scalar>
Scalar quantile(const Rearrangement<Scalar>& r, Scalar t) {
  if (!(t > Scalar(0) && t <= Scalar(1)))
    throw std::domain_error("quantile: t must lie in (0, 1]");
  const std::size_t n = r.size();
  const Scalar cells = static_cast<Scalar>(n);
  auto k = static_cast<std::size_t>(std::ceil(t * cells));
  // t*n can round up past an exact boundary (0.3 * 10 > 3); re-check against the boundary itself.
  if (k > 1 && t <= static_cast<Scalar>(k - 1) / cells) --k;
  k = std::clamp<std::size_t>(k, 1, n);
  return r[k - 1];
}

template <std::floating_point Scalar>
CumulativePair<Scalar> cumulative_pair(const GridFunction<Scalar>& g,
                                       const Rearrangement<Scalar>& r) {
  if (r.size() != g.size())
    throw std::invalid_argument("cumulative_pair: rearrangement does not match the grid");
  const std::size_t n = g.size();
  const Scalar width = g.cell_width();
  CumulativePair<Scalar> pair;
  pair.H.resize(static_cast<Eigen::Index>(n + 1));
  pair.C.resize(static_cast<Eigen::Index>(n + 1));
  pair.domain_length = g.domain_length();
  pair.H[0] = Scalar(0);
  pair.C[0] = Scalar(0);
  ExactSum<Scalar> h_acc, c_acc;
  for (std::size_t i = 0; i < n; ++i) {
    h_acc.add(g[i]);
    c_acc.add(r[i]);
    const auto k = static_cast<Eigen::Index>(i + 1);
    pair.H[k] = h_acc.value() * width;
    pair.C[k] = c_acc.value() * width;
  }
  return pair;
}

template <std::floating_point Scalar>
CumulativePair<Scalar> cumulative_pair(const GridFunction<Scalar>& g) {
  return cumulative_pair(g, rearrange(g));
}

}  // namespace monoindex
