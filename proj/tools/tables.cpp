#include <array>
#include <future>
#include <numbers>

#include "cli.hpp"

namespace monoindex::cli {

SinCosTables compute_sin_cos_tables(std::size_t n) {
  constexpr double pi = std::numbers::pi;
  const std::array<std::pair<const char*, double>, 4> domains{{
      {"pi/2", pi / 2}, {"pi", pi}, {"3pi/2", 3 * pi / 2}, {"2pi", 2 * pi}}};

  struct Cell {
    IndexReport unit_sin, unit_cos;
  };
  // Each M is independent; evaluate them concurrently.
  std::array<std::future<Cell>, 4> cells;
  for (std::size_t k = 0; k < domains.size(); ++k) {
    const double M = domains[k].second;
    cells[k] = std::async(std::launch::async, [M, n] {
      return Cell{compute_indices(sample(AnalyticFunction::sin_m(M), n), 1.0),
                  compute_indices(sample(AnalyticFunction::cos_m(M), n), 1.0)};
    });
  }

  SinCosTables tables;
  tables.n = n;
  for (std::size_t k = 0; k < domains.size(); ++k) {
    const auto [label, M] = domains[k];
    const Cell c = cells[k].get();
    tables.unit.push_back({label, M, c.unit_sin.index_I, c.unit_cos.index_I,
                           c.unit_sin.index_L, c.unit_cos.index_L});
    // Pullback scaling: I on [0, M] is M * I on [0, 1], L picks up M^2.
    tables.scaled.push_back({label, M, M * c.unit_sin.index_I, M * c.unit_cos.index_I,
                             M * M * c.unit_sin.index_L, M * M * c.unit_cos.index_L});
  }
  return tables;
}

}  // namespace monoindex::cli
