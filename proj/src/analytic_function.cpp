#include "monoindex/analytic_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace monoindex {

std::string_view to_string(SampleRule rule) noexcept {
  switch (rule) {
    case SampleRule::midpoint: return "midpoint";
    case SampleRule::left: return "left";
    case SampleRule::right: return "right";
  }
  return "midpoint";
}

SampleRule parse_sample_rule(std::string_view name) {
  if (name == "midpoint") return SampleRule::midpoint;
  if (name == "left") return SampleRule::left;
  if (name == "right") return SampleRule::right;
  throw std::invalid_argument("unknown sample rule '" + std::string(name) + "'");
}

double sample_point(std::size_t cell, std::size_t n, SampleRule rule) {
  if (n == 0) throw std::invalid_argument("sample_point: n must be positive");
  if (cell >= n) throw std::out_of_range("sample_point: cell index out of range");
  const double i = static_cast<double>(cell);
  const double cells = static_cast<double>(n);
  switch (rule) {
    case SampleRule::midpoint: return (i + 0.5) / cells;
    case SampleRule::left: return i / cells;
    // Right end of [i/n, (i+1)/n): every built-in kind is continuous there,
    // so the limit equals the value at the endpoint.
    case SampleRule::right: return (i + 1.0) / cells;
  }
  return (i + 0.5) / cells;
}

std::string_view to_string(FunctionKind kind) noexcept {
  switch (kind) {
    case FunctionKind::SinM: return "sin";
    case FunctionKind::CosM: return "cos";
    case FunctionKind::HAlpha: return "halpha";
    case FunctionKind::Constant: return "constant";
    case FunctionKind::PiecewiseLinear: return "piecewise_linear";
  }
  return "unknown";
}

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x))
    throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

AnalyticFunction AnalyticFunction::sin_m(double M) {
  require_finite(M, "sin: M");
  if (M <= 0) throw std::invalid_argument("sin: M must be positive");
  return AnalyticFunction(Sin{M});
}

AnalyticFunction AnalyticFunction::cos_m(double M) {
  require_finite(M, "cos: M");
  if (M <= 0) throw std::invalid_argument("cos: M must be positive");
  return AnalyticFunction(Cos{M});
}

AnalyticFunction AnalyticFunction::h_alpha(double alpha) {
  require_finite(alpha, "halpha: alpha");
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("halpha: alpha must lie in [0, 1]");
  return AnalyticFunction(HAlphaParams{alpha});
}

AnalyticFunction AnalyticFunction::constant(double d) {
  require_finite(d, "constant: d");
  return AnalyticFunction(ConstantParams{d});
}

AnalyticFunction AnalyticFunction::piecewise_linear(std::vector<Knot> knots) {
  if (knots.size() < 2)
    throw std::invalid_argument("piecewise_linear: need at least two knots");
  for (const Knot& k : knots) {
    require_finite(k.t, "piecewise_linear: knot abscissa");
    require_finite(k.value, "piecewise_linear: knot value");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].t > knots[i - 1].t))
      throw std::invalid_argument("piecewise_linear: abscissae must be strictly increasing");
  }
  if (knots.front().t != 0.0 || knots.back().t != 1.0)
    throw std::invalid_argument("piecewise_linear: knots must span [0, 1]");
  return AnalyticFunction(Piecewise{std::move(knots)});
}

FunctionKind AnalyticFunction::kind() const noexcept {
  return static_cast<FunctionKind>(params_.index());
}

double AnalyticFunction::frequency() const noexcept {
  if (const auto* s = std::get_if<Sin>(&params_)) return s->M;
  if (const auto* c = std::get_if<Cos>(&params_)) return c->M;
  return 1.0;
}

double AnalyticFunction::operator()(double t) const {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::domain_error("evaluate: t must lie in [0, 1]");

  struct Visitor {
    double t;
    double operator()(const Sin& p) const { return std::sin(t * p.M); }
    double operator()(const Cos& p) const { return std::cos(t * p.M); }
    double operator()(const HAlphaParams& p) const {
      if (t <= 0.5) return t;
      return p.alpha * t + (1.0 - p.alpha) * (1.0 - t);
    }
    double operator()(const ConstantParams& p) const { return p.d; }
    double operator()(const Piecewise& p) const {
      // Segment k covers (t_{k-1}, t_k]; the first one also owns t = 0.
      const auto& k = p.knots;
      auto it = std::lower_bound(k.begin(), k.end(), t,
                                 [](const Knot& knot, double x) { return knot.t < x; });
      if (it == k.begin()) return it->value;
      const Knot& hi = *it;
      const Knot& lo = *(it - 1);
      const double w = (t - lo.t) / (hi.t - lo.t);
      return lo.value + w * (hi.value - lo.value);
    }
  };
  return std::visit(Visitor{t}, params_);
}

double evaluate(const AnalyticFunction& f, double t) { return f(t); }

GridFunctiond sample(const AnalyticFunction& f, std::size_t n, SampleRule rule) {
  if (n == 0) throw std::invalid_argument("sample: n must be positive");
  GridFunctiond::Array values(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    values[static_cast<Eigen::Index>(i)] = f(sample_point(i, n, rule));
  return GridFunctiond(std::move(values), 1.0, rule);
}

}  // namespace monoindex
