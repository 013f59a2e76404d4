#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <iterator>
#include <type_traits>
#include <utility>
#include <vector>

namespace monoindex {

/// Error-free transformation: a + b == sum + err exactly.
template <std::floating_point Scalar>
constexpr std::pair<Scalar, Scalar> two_sum(Scalar a, Scalar b) noexcept {
  const Scalar sum = a + b;
  const Scalar b_virtual = sum - a;
  const Scalar a_virtual = sum - b_virtual;
  return {sum, (a - a_virtual) + (b - b_virtual)};
}

/// Error-free transformation: a * b == prod + err exactly (barring underflow).
template <std::floating_point Scalar>
inline std::pair<Scalar, Scalar> two_prod(Scalar a, Scalar b) noexcept {
  const Scalar prod = a * b;
  return {prod, std::fma(a, b, -prod)};
}

/**
 * Exact floating-point accumulator.
 *
 * Keeps the running sum as a non-overlapping expansion of partials (Shewchuk's
 * grow-expansion, the scheme behind Python's math.fsum). value() returns the
 * correctly rounded sum of everything added so far, so
 *
 *   - the result does not depend on the order terms were added in;
 *   - if the exact sum of one stream dominates another, the rounded values
 *     keep that ordering (rounding is monotone);
 *   - an exact zero is reported as zero.
 *
 * The indices and cumulative integrals rely on all three.
 */
template <std::floating_point Scalar>
class ExactSum {
 public:
  void add(Scalar x) {
    std::size_t kept = 0;
    for (std::size_t j = 0; j < partials_.size(); ++j) {
      Scalar y = partials_[j];
      if (std::abs(x) < std::abs(y)) std::swap(x, y);
      const Scalar hi = x + y;
      const Scalar lo = y - (hi - x);
      if (lo != Scalar(0)) partials_[kept++] = lo;
      x = hi;
    }
    partials_.resize(kept);
    partials_.push_back(x);
  }

  ExactSum& operator+=(Scalar x) {
    add(x);
    return *this;
  }

  /// Correctly rounded (round-half-even) value of the exact sum.
  [[nodiscard]] Scalar value() const {
    std::size_t n = partials_.size();
    if (n == 0) return Scalar(0);
    Scalar hi = partials_[--n];
    Scalar lo = 0;
    while (n > 0) {
      const Scalar x = hi;
      const Scalar y = partials_[--n];
      hi = x + y;
      lo = y - (hi - x);
      if (lo != Scalar(0)) break;
    }
    // Half-way case: the remaining partials decide the rounding direction.
    if (n > 0 && ((lo < 0 && partials_[n - 1] < 0) ||
                  (lo > 0 && partials_[n - 1] > 0))) {
      const Scalar y = lo * 2;
      const Scalar x = hi + y;
      if (y == x - hi) hi = x;
    }
    return hi;
  }

  void clear() noexcept { partials_.clear(); }

 private:
  std::vector<Scalar> partials_;
};

/// Correctly rounded sum of a range of floating-point values.
template <typename Range>
auto exact_sum(const Range& range) {
  using Scalar = std::remove_cvref_t<decltype(*std::begin(range))>;
  ExactSum<Scalar> acc;
  for (const auto& x : range) acc.add(x);
  return acc.value();
}

}  // namespace monoindex
