#pragma once

// Coprime lattice-point counting by Moebius inversion, the closed-form
// diagonal counts of the tiling tables, and their cubic growth constants.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace billiards::lattice {

/// mu(k) for 1 <= k <= limit (linear sieve), with Mertens prefix sums.
class MobiusTable {
 public:
  explicit MobiusTable(std::int64_t limit);

  std::int64_t limit() const { return static_cast<std::int64_t>(mu_.size()) - 1; }
  int operator()(std::int64_t k) const { return mu_.at(k); }
  /// sum_{k <= x} mu(k), for 0 <= x <= limit.
  std::int64_t mertens(std::int64_t x) const { return mertens_.at(x); }

 private:
  std::vector<std::int8_t> mu_;
  std::vector<std::int64_t> mertens_;
};

inline MobiusTable mobius_sieve(std::int64_t limit) { return MobiusTable(limit); }

/// {(i, j) : i, j >= 0, i + j <= bound}; axis points only with include_axes.
struct Simplex {
  std::int64_t bound = 0;
  bool include_axes = true;
};

/// Lattice points strictly inside the triangle cut out by the x-axis, the
/// diagonal y = x and the line x = -y/2 + n/2: j >= 1, i > j, 2i + j < n.
struct IsoscelesWedge {
  std::int64_t n = 0;
};

using RegionSpec = std::variant<Simplex, IsoscelesWedge>;

/// Counts points with gcd(i, j) = 1 in regions up to a fixed size, using
/// sum_d mu(d) * #(region / d) grouped over equal quotients.
class CoprimeCounter {
 public:
  explicit CoprimeCounter(std::int64_t max_size);

  std::int64_t count(const RegionSpec& region) const;
  std::int64_t max_size() const { return mobius_.limit(); }

 private:
  std::int64_t wedge_points(std::int64_t k) const;

  MobiusTable mobius_;
  std::vector<std::int64_t> wedge_points_;  // off-axis points with 2i + j <= k, i > j
};

std::int64_t coprime_count(const RegionSpec& region);

/// 4 * #{(i, j) : i + j <= n + 1, gcd = 1}: the square's closed form, axes
/// included, so it runs 4 above the exact diagonal count at every n.
std::int64_t square_closed_count(std::int64_t n, const CoprimeCounter& counter);
std::int64_t square_closed_count(std::int64_t n);

/// 3 * M(n) with M(2k) = M(2k + 1) = #{i + j <= k + 1, gcd = 1}.
std::int64_t equilateral_closed_count(std::int64_t n, const CoprimeCounter& counter);
std::int64_t equilateral_closed_count(std::int64_t n);

/// Coprime points strictly inside the wedge for n (one octant). The
/// right-isosceles closed form doubles it twice: once for the other octant,
/// once for the second grid.
std::int64_t isosceles_region_count(std::int64_t n, const CoprimeCounter& counter);
std::int64_t isosceles_region_count(std::int64_t n);

/// Link count of the right-isosceles diagonal ending at (i, j), for
/// i > j >= 0 and i + j = 2k + 1 odd: 3k + floor((i - j) / 2).
/// Throws std::invalid_argument otherwise.
std::int64_t isosceles_link_length(std::int64_t i, std::int64_t j);

/// The same length after pulling the endpoint back by m along the x-axis,
/// measured against the dashed lines crossed: l(i, j) - 2m + (m mod 2).
std::int64_t isosceles_shifted_length(std::int64_t i, std::int64_t j, std::int64_t m);

struct BoundaryOffset {
  std::int64_t m0 = 0;          // least m with shifted length <= 3k
  bool lower_bound_ok = false;  // m0 >= (i - j)/4 - 1/2
  bool upper_bound_ok = false;  // m0 <= (i - j)/4 + 1
  bool distance_ok = false;     // |i + j/2 - 3k/2 - m0| <= 5/4

  bool ok() const { return lower_bound_ok && upper_bound_ok && distance_ok; }
};

/// Scans m = 0, 1, ... for the first shifted length <= 3k and checks the
/// bounds on the result; all comparisons are exact integer ones.
BoundaryOffset isosceles_m0(std::int64_t i, std::int64_t j);

enum class TilingCase { kSquare, kRightIsosceles, kEquilateral };

/// "square", "right-isosceles", "equilateral"; anything else throws
/// std::invalid_argument.
TilingCase parse_tiling_case(std::string_view name);
std::string_view to_string(TilingCase c);

/// Leading coefficient of p(n) ~ C n^3 for the case, evaluated with MPFR at
/// `digits` significant decimal digits.
std::string limit_constant(TilingCase c, int digits = 64);
double limit_constant_value(TilingCase c);

/// Diagonal count N_c(n) of the case's closed form.
std::int64_t closed_diagonal_count(TilingCase c, std::int64_t n, const CoprimeCounter& counter);

struct AsymptoticReport {
  std::int64_t n = 0;
  std::int64_t count = 0;   // p(n) = sum_{j < n} closed N_c(j)
  std::string prediction;   // C * n^3
  double ratio = 0;         // p(n) / n^3
  double rel_dev = 0;       // |p(n) / (C n^3) - 1|
};

/// Reports for each n in `ns` (ascending), sharing one running sum.
std::vector<AsymptoticReport> estimate_limits(TilingCase c, const std::vector<std::int64_t>& ns,
                                              int digits = 64);
AsymptoticReport estimate_limit(TilingCase c, std::int64_t n, int digits = 64);

}  // namespace billiards::lattice
