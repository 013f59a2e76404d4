#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "monoindex/grid_function.hpp"

namespace monoindex {

enum class FunctionKind { SinM, CosM, HAlpha, Constant, PiecewiseLinear };

std::string_view to_string(FunctionKind kind) noexcept;

/// A (t, value) knot of a piecewise-linear function.
struct Knot {
  double t;
  double value;
};

/**
 * Built-in test functions on [0, 1].
 *
 *   SinM            t -> sin(tM)
 *   CosM            t -> cos(tM)
 *   HAlpha          t on [0, 1/2], alpha*t + (1-alpha)*(1-t) on (1/2, 1]
 *   Constant        t -> d
 *   PiecewiseLinear linear interpolation of knots spanning [0, 1]
 *
 * Parameters are validated by the factories; an AnalyticFunction is
 * immutable once built.
 */
class AnalyticFunction {
 public:
  static AnalyticFunction sin_m(double M);
  static AnalyticFunction cos_m(double M);
  static AnalyticFunction h_alpha(double alpha);
  static AnalyticFunction constant(double d);
  static AnalyticFunction piecewise_linear(std::vector<Knot> knots);

  [[nodiscard]] FunctionKind kind() const noexcept;

  /// Frequency parameter of SinM/CosM; 1 for the other kinds.
  [[nodiscard]] double frequency() const noexcept;

  /// Throws std::domain_error unless 0 <= t <= 1.
  [[nodiscard]] double operator()(double t) const;

 private:
  struct Sin { double M; };
  struct Cos { double M; };
  struct HAlphaParams { double alpha; };
  struct ConstantParams { double d; };
  struct Piecewise { std::vector<Knot> knots; };
  using Params = std::variant<Sin, Cos, HAlphaParams, ConstantParams, Piecewise>;

  explicit AnalyticFunction(Params params) : params_(std::move(params)) {}

  Params params_;
};

/// Pointwise value of f at t in [0, 1].
double evaluate(const AnalyticFunction& f, double t);

/**
 * Samples f at one point per cell of the uniform n-partition of [0, 1].
 * values[i] == evaluate(f, sample_point(i, n, rule)) for every i.
 */
GridFunctiond sample(const AnalyticFunction& f, std::size_t n,
                     SampleRule rule = SampleRule::midpoint);

}  // namespace monoindex
