#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "billiards/lattice.hpp"

using namespace billiards::lattice;

namespace {

constexpr double kPi = 3.14159265358979323846;

// direct[s] = coprime points (i, j), i, j >= 1, with i + j = s
std::vector<std::int64_t> coprime_by_sum(std::int64_t max_sum) {
  std::vector<std::int64_t> out(max_sum + 1, 0);
  for (std::int64_t i = 1; i < max_sum; ++i) {
    for (std::int64_t j = 1; i + j <= max_sum; ++j) {
      if (std::gcd(i, j) == 1) ++out[i + j];
    }
  }
  return out;
}

std::uint64_t phi(std::uint64_t n) {
  std::uint64_t out = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    out -= out / p;
  }
  if (n > 1) out -= out / n;
  return out;
}

}  // namespace

TEST_CASE("mobius values") {
  const MobiusTable mu = mobius_sieve(100);
  CHECK(mu(1) == 1);
  CHECK(mu(2) == -1);
  CHECK(mu(4) == 0);
  CHECK(mu(6) == 1);
  CHECK(mu(30) == -1);
  int divisor_sum = 0;
  for (int d = 1; d <= 12; ++d) {
    if (12 % d == 0) divisor_sum += mu(d);
  }
  CHECK(divisor_sum == 0);
  for (int a = 1; a <= 10; ++a) {
    for (int b = 1; b <= 10; ++b) {
      if (std::gcd(a, b) == 1) CHECK(mu(a * b) == mu(a) * mu(b));
    }
  }
  CHECK(mu.mertens(10) == -1);
  CHECK_THROWS_AS(mobius_sieve(0), std::invalid_argument);
}

TEST_CASE("coprime counts, spec examples") {
  CHECK(coprime_count(Simplex{4, true}) == 7);
  CHECK(coprime_count(Simplex{2, false}) == 1);
  CHECK(coprime_count(Simplex{0, true}) == 0);
  CHECK(coprime_count(IsoscelesWedge{1}) == 0);
  // n = 5: 2i + j <= 4, i > j >= 1: none; n = 6: (2, 1)
  CHECK(coprime_count(IsoscelesWedge{5}) == 0);
  CHECK(coprime_count(IsoscelesWedge{6}) == 1);
}

TEST_CASE("moebius counts equal direct gcd loops for every size up to 2000") {
  const std::int64_t limit = 2000;
  const CoprimeCounter counter(limit);
  const auto by_sum = coprime_by_sum(limit);
  std::int64_t running = 0;
  for (std::int64_t n = 1; n <= limit; ++n) {
    running += by_sum[n];
    REQUIRE(counter.count(Simplex{n, false}) == running);
    REQUIRE(counter.count(Simplex{n, true}) == running + 2);
  }
  // wedge: bucket by 2i + j
  std::vector<std::int64_t> by_key(limit + 1, 0);
  for (std::int64_t j = 1; 3 * j < limit; ++j) {
    for (std::int64_t i = j + 1; 2 * i + j <= limit; ++i) {
      if (std::gcd(i, j) == 1) ++by_key[2 * i + j];
    }
  }
  std::int64_t wedge = 0;
  for (std::int64_t k = 1; k <= limit; ++k) {
    wedge += by_key[k];
    REQUIRE(counter.count(IsoscelesWedge{k + 1}) == wedge);
  }
  CHECK(isosceles_region_count(3) == 0);
}

TEST_CASE("closed forms") {
  CHECK(square_closed_count(0) == 8);
  CHECK(square_closed_count(1) == 12);
  CHECK(equilateral_closed_count(0) == 6);
  const CoprimeCounter counter(1002);
  for (std::int64_t k = 0; k <= 1000; ++k) {
    REQUIRE(equilateral_closed_count(2 * k, counter) == equilateral_closed_count(2 * k + 1, counter));
  }
  const double n = 1e5;
  CHECK(std::abs(square_closed_count(100000) / (12 / (kPi * kPi) * n * n) - 1) < 0.01);
  const double m = 1e4;
  CHECK(std::abs(equilateral_closed_count(20000) / (9 / (kPi * kPi) * m * m) - 1) < 0.01);
  CHECK_THROWS_AS(square_closed_count(-1), std::invalid_argument);
}

TEST_CASE("summed square closed form is the totient oracle shifted by 4n") {
  const CoprimeCounter counter(1001);
  std::int64_t sum = 0;
  std::uint64_t oracle_inner = 0;  // sum_{i<=n} (n - i + 1) phi(i), updated incrementally
  std::uint64_t phi_sum = 0;
  for (std::int64_t n = 1; n <= 1000; ++n) {
    sum += square_closed_count(n - 1, counter);
    phi_sum += phi(static_cast<std::uint64_t>(n));
    oracle_inner += phi_sum;
    REQUIRE(sum == static_cast<std::int64_t>(4 * oracle_inner) + 4 * n);
  }
}

TEST_CASE("right-isosceles link length") {
  CHECK(isosceles_link_length(2, 1) == 3);
  CHECK(isosceles_link_length(4, 1) == 7);
  CHECK_THROWS_AS(isosceles_link_length(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(isosceles_link_length(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(isosceles_link_length(1, 2), std::invalid_argument);
}

TEST_CASE("boundary offset scan") {
  const BoundaryOffset a = isosceles_m0(2, 1);
  CHECK(a.m0 == 0);
  CHECK(a.ok());
  const BoundaryOffset b = isosceles_m0(9, 2);
  CHECK(4 * b.m0 >= 7 - 2);
  CHECK(4 * b.m0 <= 7 + 4);
  CHECK(b.ok());

  for (std::int64_t i = 1; i <= 200; ++i) {
    for (std::int64_t j = 0; j < i; ++j) {
      if ((i + j) % 2 == 0) continue;
      const BoundaryOffset r = isosceles_m0(i, j);
      REQUIRE(r.ok());
      const std::int64_t n = 3 * ((i + j - 1) / 2);
      const std::int64_t d = i - j;
      for (std::int64_t m = 0; m <= i - 1; ++m) {
        const std::int64_t shifted = isosceles_shifted_length(i, j, m);
        // m > (i - j)/4  =>  l(i - m, j) <= n
        if (4 * m > d) REQUIRE(shifted <= n);
        // m <= (i - j)/4 - 1/2  =>  l(i - m, j) >= n + 1
        if (4 * m <= d - 2) REQUIRE(shifted >= n + 1);
        // even shifts land on pairs where the unshifted formula applies
        if (m % 2 == 0 && i - m > j) REQUIRE(shifted == isosceles_link_length(i - m, j));
      }
    }
  }
}

TEST_CASE("limit constants") {
  CHECK(limit_constant(TilingCase::kSquare, 6) == "0.405285");
  CHECK(limit_constant(TilingCase::kRightIsosceles, 6) == "0.0675475");
  CHECK(limit_constant(TilingCase::kEquilateral, 6) == "0.0759909");
  CHECK(limit_constant(TilingCase::kSquare, 40).substr(0, 22) == "0.40528473456935108577");
  CHECK(limit_constant_value(TilingCase::kSquare) == doctest::Approx(4 / (kPi * kPi)).epsilon(1e-15));
  CHECK(parse_tiling_case("equilateral") == TilingCase::kEquilateral);
  CHECK_THROWS_AS(parse_tiling_case("half-equilateral"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tiling_case("hexagon"), std::invalid_argument);
}

TEST_CASE("density and growth") {
  // Mertens: coprime simplex count ~ (6 / pi^2) N^2 / 2, trending closer
  double previous = 1;
  for (std::int64_t n : {100, 1000, 10000, 100000}) {
    const double ratio = coprime_count(Simplex{n, false}) / (0.5 * double(n) * double(n));
    const double dev = std::abs(ratio / (6 / (kPi * kPi)) - 1);
    CHECK(dev < previous);
    previous = dev;
  }
  CHECK(previous < 0.005);

  const double n = 1e4;
  CHECK(std::abs(isosceles_region_count(10000) / (n * n) / (1 / (2 * kPi * kPi)) - 1) < 0.01);

  const auto reports = estimate_limits(TilingCase::kSquare, {10, 100, 1000, 10000});
  REQUIRE(reports.size() == 4);
  CHECK(reports[3].rel_dev < 0.01);
  CHECK(reports[3].rel_dev < reports[0].rel_dev);
  CHECK(estimate_limit(TilingCase::kEquilateral, 10000).rel_dev < 0.01);
  CHECK(estimate_limit(TilingCase::kRightIsosceles, 10000).rel_dev < 0.02);
  CHECK_THROWS_AS(estimate_limits(TilingCase::kSquare, {100, 10}), std::invalid_argument);
  CHECK_THROWS_AS(estimate_limit(TilingCase::kSquare, 0), std::invalid_argument);
}
