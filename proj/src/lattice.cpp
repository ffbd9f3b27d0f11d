#include "billiards/lattice.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace billiards::lattice {

MobiusTable::MobiusTable(std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("mobius_sieve needs limit >= 1");
  const auto m = static_cast<std::size_t>(limit);
  mu_.assign(m + 1, 1);
  mu_[0] = 0;
  std::vector<bool> composite(m + 1, false);
  std::vector<std::size_t> primes;
  for (std::size_t k = 2; k <= m; ++k) {
    if (!composite[k]) {
      primes.push_back(k);
      mu_[k] = -1;
    }
    for (std::size_t p : primes) {
      if (p * k > m) break;
      composite[p * k] = true;
      if (k % p == 0) {
        mu_[p * k] = 0;
        break;
      }
      mu_[p * k] = static_cast<std::int8_t>(-mu_[k]);
    }
  }
  mertens_.assign(m + 1, 0);
  for (std::size_t k = 1; k <= m; ++k) mertens_[k] = mertens_[k - 1] + mu_[k];
}

namespace {

std::int64_t triangle(std::int64_t m) { return m <= 1 ? 0 : m * (m - 1) / 2; }

// sum_{d=1}^{k} mu(d) f(floor(k/d)), one term per distinct quotient.
template <class F>
std::int64_t mobius_sum(const MobiusTable& mu, std::int64_t k, F f) {
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= k;) {
    const std::int64_t q = k / d;
    const std::int64_t hi = k / q;
    total += (mu.mertens(hi) - mu.mertens(d - 1)) * f(q);
    d = hi + 1;
  }
  return total;
}

}  // namespace

CoprimeCounter::CoprimeCounter(std::int64_t max_size)
    : mobius_(std::max<std::int64_t>(max_size, 1)) {
  const auto m = static_cast<std::size_t>(mobius_.limit());
  wedge_points_.assign(m + 1, 0);
  for (std::size_t k = 1; k <= m; ++k) {
    // points on 2i + j = k: j >= 1, j = k mod 2, 3j < k
    const std::int64_t b = (static_cast<std::int64_t>(k) - 1) / 3;
    const std::int64_t row = k % 2 == 1 ? (b + 1) / 2 : b / 2;
    wedge_points_[k] = wedge_points_[k - 1] + row;
  }
}

std::int64_t CoprimeCounter::wedge_points(std::int64_t k) const { return wedge_points_.at(k); }

std::int64_t CoprimeCounter::count(const RegionSpec& region) const {
  if (const auto* s = std::get_if<Simplex>(&region)) {
    if (s->bound < 1) return 0;
    if (s->bound > max_size()) throw std::out_of_range("simplex larger than the counter");
    return mobius_sum(mobius_, s->bound, triangle) + (s->include_axes ? 2 : 0);
  }
  const auto& w = std::get<IsoscelesWedge>(region);
  const std::int64_t k = w.n - 1;  // 2i + j <= k
  if (k < 1) return 0;
  if (k > max_size()) throw std::out_of_range("wedge larger than the counter");
  return mobius_sum(mobius_, k, [this](std::int64_t q) { return wedge_points(q); });
}

std::int64_t coprime_count(const RegionSpec& region) {
  const std::int64_t size = std::visit(
      [](const auto& r) {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, Simplex>) return r.bound;
        else return r.n - 1;
      },
      region);
  if (size < 1) return 0;
  return CoprimeCounter(size).count(region);
}

std::int64_t square_closed_count(std::int64_t n, const CoprimeCounter& counter) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  return 4 * counter.count(Simplex{n + 1, true});
}

std::int64_t square_closed_count(std::int64_t n) {
  return square_closed_count(n, CoprimeCounter(n + 1));
}

std::int64_t equilateral_closed_count(std::int64_t n, const CoprimeCounter& counter) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  return 3 * counter.count(Simplex{n / 2 + 1, true});
}

std::int64_t equilateral_closed_count(std::int64_t n) {
  return equilateral_closed_count(n, CoprimeCounter(n / 2 + 1));
}

std::int64_t isosceles_region_count(std::int64_t n, const CoprimeCounter& counter) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return counter.count(IsoscelesWedge{n});
}

std::int64_t isosceles_region_count(std::int64_t n) {
  return isosceles_region_count(n, CoprimeCounter(std::max<std::int64_t>(n - 1, 1)));
}

namespace {

void require_odd_pair(std::int64_t i, std::int64_t j) {
  if (j < 0 || i <= j || (i + j) % 2 == 0) {
    throw std::invalid_argument("(" + std::to_string(i) + ", " + std::to_string(j) +
                                ") needs i > j >= 0 and i + j odd");
  }
}

}  // namespace

std::int64_t isosceles_link_length(std::int64_t i, std::int64_t j) {
  require_odd_pair(i, j);
  const std::int64_t k = (i + j - 1) / 2;
  return 3 * k + (i - j) / 2;
}

std::int64_t isosceles_shifted_length(std::int64_t i, std::int64_t j, std::int64_t m) {
  if (m < 0 || m > i - 1) throw std::invalid_argument("shift m must lie in [0, i - 1]");
  return isosceles_link_length(i, j) - 2 * m + m % 2;
}

BoundaryOffset isosceles_m0(std::int64_t i, std::int64_t j) {
  require_odd_pair(i, j);
  const std::int64_t n = 3 * ((i + j - 1) / 2);
  std::int64_t m = 0;
  while (isosceles_shifted_length(i, j, m) > n) {
    if (m == i - 1) throw std::logic_error("no admissible shift");
    ++m;
  }
  // Scaled by 4 to stay in integers; note i + j/2 - n/2 = (i - j + 3)/4.
  const std::int64_t d = i - j;
  BoundaryOffset out;
  out.m0 = m;
  out.lower_bound_ok = 4 * m >= d - 2;
  out.upper_bound_ok = 4 * m <= d + 4;
  out.distance_ok = std::abs(d + 3 - 4 * m) <= 5;
  return out;
}

TilingCase parse_tiling_case(std::string_view name) {
  if (name == "square") return TilingCase::kSquare;
  if (name == "right-isosceles") return TilingCase::kRightIsosceles;
  if (name == "equilateral") return TilingCase::kEquilateral;
  throw std::invalid_argument("no closed form for case '" + std::string(name) +
                              "' (expected square, right-isosceles or equilateral)");
}

std::string_view to_string(TilingCase c) {
  switch (c) {
    case TilingCase::kSquare: return "square";
    case TilingCase::kRightIsosceles: return "right-isosceles";
    case TilingCase::kEquilateral: return "equilateral";
  }
  return "?";
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

 private:
  mpfr_t v_;
};

mpfr_prec_t bits_for(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be >= 1 digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

std::pair<long, long> constant_ratio(TilingCase c) {
  switch (c) {
    case TilingCase::kSquare: return {4, 1};
    case TilingCase::kRightIsosceles: return {2, 3};
    case TilingCase::kEquilateral: return {3, 4};
  }
  return {0, 1};
}

// num / (den * pi^2)
void set_constant(Mpfr& out, TilingCase c, mpfr_prec_t bits) {
  const auto [num, den] = constant_ratio(c);
  Mpfr pi(bits);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_sqr(pi.get(), pi.get(), MPFR_RNDN);
  mpfr_mul_si(pi.get(), pi.get(), den, MPFR_RNDN);
  mpfr_si_div(out.get(), num, pi.get(), MPFR_RNDN);
}

}  // namespace

std::string limit_constant(TilingCase c, int digits) {
  const mpfr_prec_t bits = bits_for(digits);
  Mpfr v(bits);
  set_constant(v, c, bits);
  return v.to_string(digits);
}

double limit_constant_value(TilingCase c) {
  Mpfr v(128);
  set_constant(v, c, 128);
  return v.to_double();
}

std::int64_t closed_diagonal_count(TilingCase c, std::int64_t n, const CoprimeCounter& counter) {
  switch (c) {
    case TilingCase::kSquare: return square_closed_count(n, counter);
    case TilingCase::kEquilateral: return equilateral_closed_count(n, counter);
    case TilingCase::kRightIsosceles:
      return n < 1 ? 0 : 4 * isosceles_region_count(n, counter);
  }
  return 0;
}

std::vector<AsymptoticReport> estimate_limits(TilingCase c, const std::vector<std::int64_t>& ns,
                                              int digits) {
  if (ns.empty()) return {};
  if (!std::is_sorted(ns.begin(), ns.end()) || ns.front() < 1) {
    throw std::invalid_argument("n values must be ascending and >= 1");
  }
  const CoprimeCounter counter(ns.back() + 1);
  const mpfr_prec_t bits = bits_for(digits);
  Mpfr constant(bits);
  set_constant(constant, c, bits);

  std::vector<AsymptoticReport> out;
  std::int64_t sum = 0;
  std::int64_t j = 0;
  for (std::int64_t n : ns) {
    for (; j < n; ++j) sum += closed_diagonal_count(c, j, counter);
    AsymptoticReport r;
    r.n = n;
    r.count = sum;

    Mpfr cube(bits), prediction(bits), ratio(bits), dev(bits);
    mpfr_set_si(cube.get(), n, MPFR_RNDN);
    mpfr_pow_ui(cube.get(), cube.get(), 3, MPFR_RNDN);
    mpfr_mul(prediction.get(), constant.get(), cube.get(), MPFR_RNDN);
    mpfr_set_si(ratio.get(), sum, MPFR_RNDN);
    mpfr_div(ratio.get(), ratio.get(), cube.get(), MPFR_RNDN);
    mpfr_div(dev.get(), ratio.get(), constant.get(), MPFR_RNDN);
    mpfr_sub_ui(dev.get(), dev.get(), 1, MPFR_RNDN);
    mpfr_abs(dev.get(), dev.get(), MPFR_RNDN);

    r.prediction = prediction.to_string(digits);
    r.ratio = ratio.to_double();
    r.rel_dev = dev.to_double();
    out.push_back(std::move(r));
  }
  return out;
}

AsymptoticReport estimate_limit(TilingCase c, std::int64_t n, int digits) {
  return estimate_limits(c, {n}, digits).front();
}

}  // namespace billiards::lattice
