#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "monoindex/summation.hpp"

using monoindex::ExactSum;
using monoindex::exact_sum;
using monoindex::two_prod;
using monoindex::two_sum;

TEST_CASE("ExactSum recovers what naive summation cancels away", "[summation]") {
  CHECK(exact_sum(std::vector<double>{1e100, 1.0, -1e100}) == 1.0);
  CHECK(exact_sum(std::vector<double>{1e16, 1.0, 1.0, -1e16}) == 2.0);
  CHECK(exact_sum(std::vector<double>(10, 0.1)) == 1.0);
  CHECK(exact_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("ExactSum rounds half-way cases to even", "[summation]") {
  // 1 + 2^-53 is exactly half-way between 1 and its successor; the tiny
  // third term pushes it over.
  const double half_ulp = std::ldexp(1.0, -53);
  CHECK(exact_sum(std::vector<double>{1.0, half_ulp}) == 1.0);
  CHECK(exact_sum(std::vector<double>{1.0, half_ulp, std::ldexp(1.0, -100)}) ==
        std::nextafter(1.0, 2.0));
}

TEST_CASE("ExactSum is independent of summation order", "[summation][property]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mag(-30, 30);
  std::uniform_real_distribution<double> unit(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(1 + trial);
    for (auto& x : v) x = unit(rng) * std::exp2(mag(rng));
    const double reference = exact_sum(v);
    for (int k = 0; k < 5; ++k) {
      std::shuffle(v.begin(), v.end(), rng);
      REQUIRE(exact_sum(v) == reference);
    }
  }
}

TEST_CASE("error-free transforms are exact", "[summation]") {
  const auto [s, e] = two_sum(1.0, 1e-20);
  CHECK(s == 1.0);
  CHECK(e == 1e-20);

  const double a = 1.0 + std::ldexp(1.0, -30);
  const auto [p, q] = two_prod(a, a);
  // a^2 = 1 + 2^-29 + 2^-60; the last term does not fit next to 1.
  CHECK(p == 1.0 + std::ldexp(1.0, -29));
  CHECK(q == std::ldexp(1.0, -60));
}
