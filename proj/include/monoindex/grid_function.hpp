#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "monoindex/summation.hpp"

namespace monoindex {

/// Which point t_i of the cell [(i-1)/n, i/n) a sample is taken at.
enum class SampleRule { midpoint, left, right };

std::string_view to_string(SampleRule rule) noexcept;
/// Throws std::invalid_argument for anything other than midpoint/left/right.
SampleRule parse_sample_rule(std::string_view name);

/// Abscissa in [0, 1] of the sample for 0-based cell `cell` out of `n`.
double sample_point(std::size_t cell, std::size_t n, SampleRule rule);

template <std::floating_point Scalar>
using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/**
 * Samples tau_1..tau_n of a function on a uniform partition of [0, M].
 *
 * Represents the step function equal to tau_i on [(i-1)M/n, iM/n). The
 * values are finite and n >= 1; both are checked on construction, so every
 * GridFunction in circulation is a valid input to the rearrangement and the
 * indices.
 */
template <std::floating_point Scalar>
class GridFunction {
 public:
  using Array = ArrayX<Scalar>;

  explicit GridFunction(Array values, Scalar domain_length = Scalar(1),
                        SampleRule rule = SampleRule::midpoint)
      : values_(std::move(values)), domain_length_(domain_length), rule_(rule) {
    if (values_.size() < 1)
      throw std::invalid_argument("GridFunction: need at least one sample");
    if (!(domain_length_ > Scalar(0)) || !std::isfinite(domain_length_))
      throw std::invalid_argument("GridFunction: domain length must be positive and finite");
    for (Eigen::Index i = 0; i < values_.size(); ++i) {
      if (!std::isfinite(values_[i]))
        throw std::invalid_argument("GridFunction: sample " + std::to_string(i + 1) +
                                    " is not finite");
    }
  }

  static GridFunction from_values(std::span<const Scalar> values,
                                  Scalar domain_length = Scalar(1),
                                  SampleRule rule = SampleRule::midpoint) {
    Array a(static_cast<Eigen::Index>(values.size()));
    std::copy(values.begin(), values.end(), a.data());
    return GridFunction(std::move(a), domain_length, rule);
  }

  static GridFunction from_values(std::initializer_list<Scalar> values,
                                  Scalar domain_length = Scalar(1),
                                  SampleRule rule = SampleRule::midpoint) {
    return from_values(std::span<const Scalar>(values.begin(), values.size()),
                       domain_length, rule);
  }

  [[nodiscard]] const Array& values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept {
    return static_cast<std::size_t>(values_.size());
  }
  [[nodiscard]] Scalar domain_length() const noexcept { return domain_length_; }
  [[nodiscard]] SampleRule sample_rule() const noexcept { return rule_; }
  [[nodiscard]] Scalar cell_width() const noexcept {
    return domain_length_ / static_cast<Scalar>(values_.size());
  }

  Scalar operator[](std::size_t i) const { return values_[static_cast<Eigen::Index>(i)]; }

  /// Same samples reinterpreted on [0, M].
  [[nodiscard]] GridFunction with_domain_length(Scalar domain_length) const {
    return GridFunction(values_, domain_length, rule_);
  }

  /// True when both live on the same partition (equal n and M).
  [[nodiscard]] bool shares_grid_with(const GridFunction& other) const noexcept {
    return size() == other.size() && domain_length_ == other.domain_length_;
  }

 private:
  Array values_;
  Scalar domain_length_;
  SampleRule rule_;
};

using GridFunctiond = GridFunction<double>;

namespace detail {
template <std::floating_point Scalar>
void require_shared_grid(const GridFunction<Scalar>& a, const GridFunction<Scalar>& b,
                         const char* what) {
  if (!a.shares_grid_with(b))
    throw std::invalid_argument(std::string(what) + ": grid functions do not share a grid");
}
}  // namespace detail

template <std::floating_point Scalar>
GridFunction<Scalar> operator+(const GridFunction<Scalar>& a, const GridFunction<Scalar>& b) {
  detail::require_shared_grid(a, b, "operator+");
  return GridFunction<Scalar>(a.values() + b.values(), a.domain_length(), a.sample_rule());
}

template <std::floating_point Scalar>
GridFunction<Scalar> operator-(const GridFunction<Scalar>& a, const GridFunction<Scalar>& b) {
  detail::require_shared_grid(a, b, "operator-");
  return GridFunction<Scalar>(a.values() - b.values(), a.domain_length(), a.sample_rule());
}

template <std::floating_point Scalar>
GridFunction<Scalar> operator+(const GridFunction<Scalar>& g, Scalar shift) {
  return GridFunction<Scalar>(g.values() + shift, g.domain_length(), g.sample_rule());
}

template <std::floating_point Scalar>
GridFunction<Scalar> operator*(Scalar scale, const GridFunction<Scalar>& g) {
  return GridFunction<Scalar>(scale * g.values(), g.domain_length(), g.sample_rule());
}

template <std::floating_point Scalar>
GridFunction<Scalar> operator-(const GridFunction<Scalar>& g) {
  return GridFunction<Scalar>(-g.values(), g.domain_length(), g.sample_rule());
}

/// t -> -g(M - t): turned upside down and mirrored left to right.
template <std::floating_point Scalar>
GridFunction<Scalar> flipped(const GridFunction<Scalar>& g) {
  return GridFunction<Scalar>(-g.values().reverse(), g.domain_length(), g.sample_rule());
}

/**
 * L1 distance between the step functions of two grid functions on the same
 * domain [0, M]. The grids may have different sizes; the integral is exact
 * over the common refinement of the two partitions.
 */
template <std::floating_point Scalar>
Scalar l1_distance(const GridFunction<Scalar>& a, const GridFunction<Scalar>& b) {
  if (a.domain_length() != b.domain_length())
    throw std::invalid_argument("l1_distance: domain lengths differ");
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  // Work in units of 1/(na*nb) of the domain so every breakpoint is an integer.
  ExactSum<Scalar> acc;
  std::size_t i = 0, j = 0;
  std::size_t pos = 0;
  const std::size_t end = na * nb;
  while (pos < end) {
    const std::size_t next = std::min((i + 1) * nb, (j + 1) * na);
    const Scalar width = static_cast<Scalar>(next - pos);
    acc.add(width * std::abs(a[i] - b[j]));
    pos = next;
    if (pos == (i + 1) * nb) ++i;
    if (pos == (j + 1) * na) ++j;
  }
  return acc.value() * a.domain_length() / static_cast<Scalar>(end);
}

}  // namespace monoindex
