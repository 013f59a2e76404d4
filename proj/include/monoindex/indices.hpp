#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "monoindex/analytic_function.hpp"
#include "monoindex/grid_function.hpp"
#include "monoindex/rearrangement.hpp"
#include "monoindex/summation.hpp"

namespace monoindex {

// Unit-domain estimators. The samples are read as the pullback h(t) = f(tM)
// on [0, 1]; the grid's own domain length is not consulted.
//
// Every sum goes through ExactSum fed with error-free transforms of the
// terms, so each estimator is the correctly rounded value of its exact
// finite sum. In particular an estimator is zero exactly when the samples
// are already sorted, and it never comes out negative.

/// (1/n) * sum |tau_{i:n} - tau_i|
template <std::floating_point Scalar>
Scalar index_I_unit(const GridFunction<Scalar>& g, const Rearrangement<Scalar>& r) {
  const std::size_t n = g.size();
  ExactSum<Scalar> acc;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [diff, err] = two_sum(r[i], -g[i]);
    if (diff > 0) {
      acc.add(diff);
      acc.add(err);
    } else if (diff < 0) {
      acc.add(-diff);
      acc.add(-err);
    }
  }
  return acc.value() / static_cast<Scalar>(n);
}

template <std::floating_point Scalar>
Scalar index_I_unit(const GridFunction<Scalar>& g) {
  return index_I_unit(g, rearrange(g));
}

/// (1/n^2) * sum i * (tau_{i:n} - tau_i), i = 1..n
template <std::floating_point Scalar>
Scalar index_L_unit(const GridFunction<Scalar>& g, const Rearrangement<Scalar>& r) {
  const std::size_t n = g.size();
  ExactSum<Scalar> acc;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [diff, err] = two_sum(r[i], -g[i]);
    if (diff == Scalar(0)) continue;
    const Scalar weight = static_cast<Scalar>(i + 1);
    const auto [p_hi, p_lo] = two_prod(weight, diff);
    const auto [q_hi, q_lo] = two_prod(weight, err);
    acc.add(p_hi);
    acc.add(p_lo);
    acc.add(q_hi);
    acc.add(q_lo);
  }
  const Scalar cells = static_cast<Scalar>(n);
  return acc.value() / (cells * cells);
}

template <std::floating_point Scalar>
Scalar index_L_unit(const GridFunction<Scalar>& g) {
  return index_L_unit(g, rearrange(g));
}

/**
 * The L index through the cumulative integrals: the average over the grid
 * nodes of H_k - C_k. Each gap is accumulated exactly from the terms of both
 * prefix sums before rounding, so the gaps are non-negative as computed.
 * Independent of index_L_unit's weighted sum; the two agree to rounding.
 */
template <std::floating_point Scalar>
Scalar index_L_via_cumulative(const GridFunction<Scalar>& g, const Rearrangement<Scalar>& r) {
  const std::size_t n = g.size();
  const Scalar cells = static_cast<Scalar>(n);
  ExactSum<Scalar> gap;
  ExactSum<Scalar> total;
  for (std::size_t k = 0; k < n; ++k) {
    gap.add(g[k]);
    gap.add(-r[k]);
    total.add(gap.value());
  }
  return total.value() / (cells * cells);
}

template <std::floating_point Scalar>
Scalar index_L_via_cumulative(const GridFunction<Scalar>& g) {
  return index_L_via_cumulative(g, rearrange(g));
}

namespace detail {
template <std::floating_point Scalar>
void require_positive_domain(Scalar M) {
  if (!(M > Scalar(0)) || !std::isfinite(M))
    throw std::invalid_argument("domain length M must be positive and finite");
}
}  // namespace detail

/// I index of f on [0, M] from samples tau_i = f(t_i M): M times the unit index.
template <std::floating_point Scalar>
Scalar index_I(const GridFunction<Scalar>& f_samples, Scalar M) {
  detail::require_positive_domain(M);
  return M * index_I_unit(f_samples);
}

/// L index of f on [0, M]: M^2 times the unit index.
template <std::floating_point Scalar>
Scalar index_L(const GridFunction<Scalar>& f_samples, Scalar M) {
  detail::require_positive_domain(M);
  return M * M * index_L_unit(f_samples);
}

/// Scaled indices on the grid's own domain [0, domain_length].
template <std::floating_point Scalar>
Scalar index_I(const GridFunction<Scalar>& g) {
  return index_I(g, g.domain_length());
}

template <std::floating_point Scalar>
Scalar index_L(const GridFunction<Scalar>& g) {
  return index_L(g, g.domain_length());
}

struct RichardsonGap {
  double index_I = 0;
  double index_L = 0;
};

struct IndexReport {
  double index_I = 0;
  double index_L = 0;
  std::size_t n = 0;
  double M = 1;
  /// |estimate(n) - estimate(n/2)|, present for convergence runs.
  std::optional<RichardsonGap> richardson_gap;
};

/// Both indices of the samples on [0, M], sharing one rearrangement.
IndexReport compute_indices(const GridFunctiond& f_samples, double M);
inline IndexReport compute_indices(const GridFunctiond& g) {
  return compute_indices(g, g.domain_length());
}

struct ConvergenceStep {
  std::size_t n = 0;
  double index_I = 0;
  double index_L = 0;
  std::optional<RichardsonGap> gap;  ///< absent for the starting grid
};

struct ConvergenceResult {
  bool converged = false;
  IndexReport report;  ///< estimates at the last grid evaluated
  std::vector<ConvergenceStep> steps;
};

/// Largest grid converge() will build.
inline constexpr std::size_t kMaxConvergenceGrid = std::size_t{1} << 26;

/**
 * Doubles n from n0 until both |est(2n) - est(n)| < tol, or max_doublings
 * doublings have been made. The doubling gap stands in for the discretisation
 * error bound, which needs f between the samples and so cannot be computed.
 *
 * Running out of doublings is not an exception: the result carries the last
 * estimates with converged == false.
 */
ConvergenceResult converge(const AnalyticFunction& f, double M, std::size_t n0, double tol,
                           int max_doublings, SampleRule rule = SampleRule::midpoint);

}  // namespace monoindex
