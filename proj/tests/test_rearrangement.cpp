#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "monoindex/oracles.hpp"
#include "monoindex/rearrangement.hpp"
#include "support/random_grids.hpp"

using namespace monoindex;
using Catch::Approx;

namespace {
std::vector<double> to_vector(const ArrayX<double>& a) { return {a.data(), a.data() + a.size()}; }
}  // namespace

TEST_CASE("rearrange sorts ascending", "[rearrangement]") {
  using V = std::vector<double>;
  CHECK(to_vector(rearrange(GridFunctiond::from_values({2, 1, 3})).sorted_values) == V{1, 2, 3});
  CHECK(to_vector(rearrange(GridFunctiond::from_values({1, 2, 3})).sorted_values) == V{1, 2, 3});
  CHECK(to_vector(rearrange(GridFunctiond::from_values({5, 5, 5})).sorted_values) == V{5, 5, 5});

  const auto r = rearrange(GridFunctiond::from_values({4, 1}, 2.5));
  CHECK(r.source_n == 2);
  CHECK(r.domain_length == 2.5);
}

TEST_CASE("distribution counts cells at or below x", "[rearrangement]") {
  const auto g = GridFunctiond::from_values({2, 1, 3});
  CHECK(distribution(g, 1.0) == Approx(1.0 / 3));
  CHECK(distribution(g, 2.5) == Approx(2.0 / 3));
  CHECK(distribution(g, 3.0) == 1.0);
  CHECK(distribution(g, 0.5) == 0.0);
  CHECK_THROWS_AS(distribution(g, std::nan("")), std::invalid_argument);
}

TEST_CASE("quantile reads the sorted value of the cell holding t", "[rearrangement]") {
  const auto r = rearrange(GridFunctiond::from_values({3, 1, 2}));
  CHECK(quantile(r, 0.5) == 2);
  CHECK(quantile(r, 1.0) == 3);
  CHECK(quantile(r, 0.01) == 1);
  // cells are left-open: t = 1/3 still belongs to the first one
  CHECK(quantile(r, 1.0 / 3) == 1);

  std::vector<double> ten(10);
  for (int i = 0; i < 10; ++i) ten[i] = i;
  const auto r10 = rearrange(GridFunctiond::from_values(std::span<const double>(ten)));
  CHECK(quantile(r10, 0.3) == 2);  // 0.3 * 10 rounds above 3
  CHECK(quantile(r10, 0.7) == 6);

  CHECK_THROWS_AS(quantile(r, 0.0), std::domain_error);
  CHECK_THROWS_AS(quantile(r, 1.5), std::domain_error);
}

TEST_CASE("cumulative_pair: hand-computed prefix integrals", "[rearrangement][cumulative]") {
  {
    const auto p = cumulative_pair(GridFunctiond::from_values({2, 1, 3}));
    REQUIRE(p.H.size() == 4);
    CHECK(p.H[0] == 0);
    CHECK(p.H[1] == Approx(2.0 / 3));
    CHECK(p.H[2] == Approx(1.0));
    CHECK(p.H[3] == Approx(2.0));
    CHECK(p.C[0] == 0);
    CHECK(p.C[1] == Approx(1.0 / 3));
    CHECK(p.C[2] == Approx(1.0));
    CHECK(p.C[3] == Approx(2.0));
    CHECK(p.cells() == 3);
  }
  {
    const auto p = cumulative_pair(GridFunctiond::from_values({1, 0}));
    CHECK(p.H[1] == 0.5);
    CHECK(p.H[2] == 0.5);
    CHECK(p.C[1] == 0.0);
    CHECK(p.C[2] == 0.5);
  }
  {
    const auto p = cumulative_pair(GridFunctiond::from_values({-1, 0.5, 0.7, 2}));
    CHECK((p.H == p.C).all());
  }
  {
    // domain length scales the integrals
    const auto p = cumulative_pair(GridFunctiond::from_values({1, 0}, 4.0));
    CHECK(p.H[2] == 2.0);
    CHECK(p.domain_length == 4.0);
  }
}

TEST_CASE("rearrangement invariants on random grids", "[rearrangement][property]") {
  testing::RandomGrids rnd(20240611);
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = rnd.grid(1, 300, -10, 10);
    const auto r = rearrange(g);
    const std::size_t n = g.size();
    const double scale = g.values().abs().maxCoeff() + 1;

    // non-decreasing permutation of the input
    REQUIRE(std::is_sorted(r.sorted_values.data(), r.sorted_values.data() + n));
    auto src = to_vector(g.values());
    std::sort(src.begin(), src.end());
    REQUIRE(src == to_vector(r.sorted_values));

    // same mean, exactly once summed exactly
    REQUIRE(exact_sum(g.values()) == exact_sum(r.sorted_values));

    // equimeasurable
    for (int k = 0; k < 5; ++k) {
      const double x = rnd.uniform(-11, 11);
      REQUIRE(distribution(g, x) == distribution(r, x));
    }
    REQUIRE(distribution(g, g[0]) == distribution(r, g[0]));

    // cumulative integrals: H dominates its convex rearrangement
    const auto p = cumulative_pair(g, r);
    REQUIRE(p.H[0] == 0.0);
    REQUIRE(p.C[0] == 0.0);
    REQUIRE(p.H[static_cast<Eigen::Index>(n)] == p.C[static_cast<Eigen::Index>(n)]);
    REQUIRE((p.H >= p.C).all());
    for (std::size_t k = 1; k < n; ++k) {
      const auto i = static_cast<Eigen::Index>(k);
      REQUIRE(p.C[i + 1] - 2 * p.C[i] + p.C[i - 1] >= -1e-12 * scale);
    }

    // shift and scale equivariance
    const double d = rnd.uniform(-100, 100);
    const double c = rnd.uniform(0, 100);
    const auto rs = rearrange(g + d);
    const auto rc = rearrange(c * g);
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(rs[i] == Approx(r[i] + d).margin(1e-12 * (scale + std::abs(d))));
      REQUIRE(rc[i] == Approx(c * r[i]).margin(1e-12 * c * scale));
    }

    // flip symmetry: upside down and left to right
    const auto rf = rearrange(flipped(g));
    for (std::size_t i = 0; i < n; ++i) REQUIRE(rf[i] == -r[n - 1 - i]);
  }
}

TEST_CASE("rearrangement is additive over comonotonic pairs", "[rearrangement][property]") {
  testing::RandomGrids rnd(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto base = rnd.grid(1, 200, -10, 10);
    const auto g1 = testing::monotone_transform(base, rnd);
    const auto g2 = testing::monotone_transform(base, rnd);
    REQUIRE(check_comonotonic(g1, g2).comonotonic);

    const auto sum = rearrange(g1 + g2);
    const auto r1 = rearrange(g1);
    const auto r2 = rearrange(g2);
    for (std::size_t i = 0; i < base.size(); ++i) {
      const double expected = r1[i] + r2[i];
      REQUIRE(std::abs(sum[i] - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("stable sort keeps tied values' relative order", "[rearrangement]") {
  // Only observable through the values themselves: equal values stay equal.
  const auto r = rearrange(GridFunctiond::from_values({0.0, -0.0, 1.0}));
  CHECK(r[0] == 0.0);
  CHECK(std::signbit(r[0]) == false);  // +0 came first
  CHECK(std::signbit(r[1]) == true);
}
