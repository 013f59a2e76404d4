#include "monoindex/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace monoindex {

HAlphaOracle::HAlphaOracle(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::domain_error("h_alpha: alpha must lie in [0, 1]");
}

double HAlphaOracle::index_I() const noexcept {
  if (is_non_decreasing()) return 0.0;
  const double a = alpha_;
  return (1 - 2 * a) * (1 - a) / (2 * (3 - 2 * a));
}

double HAlphaOracle::index_L() const noexcept {
  if (is_non_decreasing()) return 0.0;
  const double a = alpha_;
  return (1 - 2 * a) * (1 - a) / 24;
}

double HAlphaOracle::distribution(double x) const {
  if (!std::isfinite(x)) throw std::domain_error("h_alpha distribution: x must be finite");
  const double a = alpha_;
  if (x < 0) return 0.0;
  if (is_non_decreasing()) {
    // Identity on [0, 1/2], then rising linearly from 1/2 to alpha.
    if (x <= 0.5) return x;
    if (x >= a) return 1.0;
    return (x - (1 - a)) / (2 * a - 1);
  }
  if (x >= 0.5) return 1.0;
  if (x <= a) return x;
  return (2 - 2 * a) / (1 - 2 * a) * x + a / (2 * a - 1);
}

void HAlphaOracle::require_non_monotone(const char* what) const {
  if (is_non_decreasing())
    throw std::domain_error(std::string(what) + ": closed form needs alpha < 1/2");
}

double HAlphaOracle::rearrangement(double t) const {
  require_non_monotone("h_alpha rearrangement");
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("h_alpha rearrangement: t must lie in [0, 1]");
  const double a = alpha_;
  if (t < a) return t;
  return ((1 - 2 * a) * t + a) / (2 - 2 * a);
}

double HAlphaOracle::crossing_point() const {
  require_non_monotone("h_alpha crossing point");
  const double a = alpha_;
  return (a - 2) / (2 * a - 3);
}

double h_alpha_index_I(double alpha) { return HAlphaOracle(alpha).index_I(); }
double h_alpha_index_L(double alpha) { return HAlphaOracle(alpha).index_L(); }
double h_alpha_rearrangement(double alpha, double t) {
  return HAlphaOracle(alpha).rearrangement(t);
}
double h_alpha_crossing_point(double alpha) { return HAlphaOracle(alpha).crossing_point(); }

}  // namespace monoindex
