#include "monoindex/indices.hpp"

#include <cmath>
#include <stdexcept>

namespace monoindex {

IndexReport compute_indices(const GridFunctiond& f_samples, double M) {
  detail::require_positive_domain(M);
  const auto r = rearrange(f_samples);
  IndexReport report;
  report.index_I = M * index_I_unit(f_samples, r);
  report.index_L = M * M * index_L_unit(f_samples, r);
  report.n = f_samples.size();
  report.M = M;
  return report;
}

ConvergenceResult converge(const AnalyticFunction& f, double M, std::size_t n0, double tol,
                           int max_doublings, SampleRule rule) {
  detail::require_positive_domain(M);
  if (n0 < 2) throw std::invalid_argument("converge: n0 must be at least 2");
  if (!(tol > 0) || !std::isfinite(tol))
    throw std::invalid_argument("converge: tolerance must be positive");
  if (max_doublings < 0) throw std::invalid_argument("converge: max_doublings must be >= 0");
  if (max_doublings >= 26 || (kMaxConvergenceGrid >> max_doublings) < n0)
    throw std::invalid_argument("converge: n0 * 2^max_doublings exceeds the largest grid");

  ConvergenceResult result;
  std::size_t n = n0;
  IndexReport current = compute_indices(sample(f, n, rule), M);
  result.steps.push_back({n, current.index_I, current.index_L, std::nullopt});

  for (int d = 0; d < max_doublings; ++d) {
    n *= 2;
    IndexReport next = compute_indices(sample(f, n, rule), M);
    const RichardsonGap gap{std::abs(next.index_I - current.index_I),
                            std::abs(next.index_L - current.index_L)};
    next.richardson_gap = gap;
    result.steps.push_back({n, next.index_I, next.index_L, gap});
    current = next;
    if (gap.index_I < tol && gap.index_L < tol) {
      result.converged = true;
      break;
    }
  }
  result.report = current;
  return result;
}

}  // namespace monoindex
