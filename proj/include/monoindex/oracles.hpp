#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "monoindex/grid_function.hpp"

namespace monoindex {

/**
 * Closed forms for the piecewise-linear family
 *
 *   h(t) = t                              on [0, 1/2]
 *   h(t) = alpha*t + (1-alpha)*(1-t)      on (1/2, 1]
 *
 * which is non-decreasing for alpha >= 1/2. Below 1/2 the rearrangement,
 * its distribution function and both indices are known exactly, which makes
 * the family the ground truth for the discretized estimators.
 */
class HAlphaOracle {
 public:
  explicit HAlphaOracle(double alpha);

  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] bool is_non_decreasing() const noexcept { return alpha_ >= 0.5; }

  /// (1-2a)(1-a) / (2(3-2a)) below 1/2, else 0.
  [[nodiscard]] double index_I() const noexcept;
  /// (1-2a)(1-a) / 24 below 1/2, else 0.
  [[nodiscard]] double index_L() const noexcept;

  /// Lebesgue measure of {t in [0,1] : h(t) <= x}.
  [[nodiscard]] double distribution(double x) const;

  // The two below only cover the non-monotone branch alpha < 1/2 and throw
  // std::domain_error otherwise.

  /// Non-decreasing rearrangement at t in [0, 1].
  [[nodiscard]] double rearrangement(double t) const;
  /// The single point where h and its rearrangement cross: (a-2)/(2a-3).
  [[nodiscard]] double crossing_point() const;

 private:
  void require_non_monotone(const char* what) const;

  double alpha_;
};

double h_alpha_index_I(double alpha);
double h_alpha_index_L(double alpha);
double h_alpha_rearrangement(double alpha, double t);
double h_alpha_crossing_point(double alpha);

struct ComonotonicityVerdict {
  bool comonotonic = true;
  /// First violating pair (i < j, 0-based, lexicographic), present iff !comonotonic.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Products of increments at or above -kComonotonicTolerance count as agreeing.
inline constexpr double kComonotonicTolerance = 1e-12;

/**
 * Exhaustive pairwise comonotonicity test: no i, j with one function going up
 * and the other going down, i.e. (tau_i - tau_j)(sigma_i - sigma_j) >= 0 for
 * all pairs. O(n^2); meant for test-sized grids.
 */
template <std::floating_point Scalar>
ComonotonicityVerdict check_comonotonic(const GridFunction<Scalar>& a,
                                        const GridFunction<Scalar>& b) {
  if (!a.shares_grid_with(b))
    throw std::invalid_argument("check_comonotonic: grid functions do not share a grid");
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar product = (a[i] - a[j]) * (b[i] - b[j]);
      if (product < -static_cast<Scalar>(kComonotonicTolerance))
        return {false, std::pair{i, j}};
    }
  }
  return {};
}

inline constexpr std::size_t kBruteForceMaxCells = 12;

/**
 * I index computed from the definitions alone, without sorting the samples:
 *
 *   1. G(x) = #{i : tau_i <= x} / n, counted directly;
 *   2. I(t) = inf{x : G(x) >= t}, searched over the jump points of G;
 *   3. the integral of |h - I| over the common refinement of the grid cells
 *      and the level sets of I, evaluated piece by piece.
 *
 * Independent oracle for index_I_unit on small grids (n <= 12).
 */
template <std::floating_point Scalar>
Scalar brute_force_index_I(const GridFunction<Scalar>& g) {
  const std::size_t n = g.size();
  if (n > kBruteForceMaxCells)
    throw std::invalid_argument("brute_force_index_I: grid too large for the brute-force oracle");

  auto G = [&](Scalar x) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] <= x) ++count;
    return static_cast<Scalar>(count) / static_cast<Scalar>(n);
  };
  // G is a right-continuous step function jumping only at sample values, so
  // the infimum is attained at the smallest sample value with G >= t.
  auto I = [&](Scalar t) {
    std::optional<Scalar> best;
    for (std::size_t j = 0; j < n; ++j) {
      if (G(g[j]) >= t && (!best || g[j] < *best)) best = g[j];
    }
    return *best;
  };

  std::set<Scalar> breaks;
  for (std::size_t i = 0; i <= n; ++i)
    breaks.insert(static_cast<Scalar>(i) / static_cast<Scalar>(n));
  for (std::size_t j = 0; j < n; ++j) breaks.insert(G(g[j]));

  Scalar integral = 0;
  for (auto it = breaks.begin(); std::next(it) != breaks.end(); ++it) {
    const Scalar lo = *it;
    const Scalar hi = *std::next(it);
    const Scalar mid = (lo + hi) / 2;
    const auto cell = std::min(static_cast<std::size_t>(mid * static_cast<Scalar>(n)), n - 1);
    integral += (hi - lo) * std::abs(g[cell] - I(mid));
  }
  return integral;
}

}  // namespace monoindex
