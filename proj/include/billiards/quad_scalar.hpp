#pragma once

// Exact elements a + b*sqrt(d) of a real quadratic field over the rationals.

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace billiards {

/// Element a + b*sqrt(d) with arbitrary-precision rational a, b and a
/// square-free radicand d >= 2 (or d = 0 for plain rationals, where b = 0).
///
/// Values carrying b = 0 are field-agnostic: they combine with elements of
/// any radicand. Mixing two different nonzero radicands throws
/// std::domain_error.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  explicit QuadScalar(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }
  QuadScalar(mpq_class a, mpq_class b, int d);

  /// sqrt(d) itself.
  static QuadScalar sqrt_of(int d);

  /// Parses `p`, `p/q`, `p/q+r/s*sqrt(d)`, `r/s*sqrt(d)` or `sqrt(d)`.
  /// Throws std::invalid_argument on malformed input.
  static QuadScalar parse(std::string_view text);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& irrational_part() const { return b_; }
  int radicand() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Exact sign in {-1, 0, +1}.
  int sign() const;
  double to_double() const;

  /// Canonical text form: `p/q` or `p/q+r/s*sqrt(d)` (also `-`).
  std::string to_string() const;

  QuadScalar& operator+=(const QuadScalar& rhs);
  QuadScalar& operator-=(const QuadScalar& rhs);
  QuadScalar& operator*=(const QuadScalar& rhs);
  QuadScalar& operator/=(const QuadScalar& rhs);

  friend QuadScalar operator+(QuadScalar lhs, const QuadScalar& rhs) { return lhs += rhs; }
  friend QuadScalar operator-(QuadScalar lhs, const QuadScalar& rhs) { return lhs -= rhs; }
  friend QuadScalar operator*(const QuadScalar& lhs, const QuadScalar& rhs);
  friend QuadScalar operator/(QuadScalar lhs, const QuadScalar& rhs) { return lhs /= rhs; }
  QuadScalar operator-() const;

  /// Multiplicative inverse; throws std::domain_error on zero.
  QuadScalar inverse() const;

  friend bool operator==(const QuadScalar& lhs, const QuadScalar& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ &&
           (lhs.d_ == rhs.d_ || sgn(lhs.b_) == 0);
  }
  friend std::strong_ordering operator<=>(const QuadScalar& lhs, const QuadScalar& rhs);

  friend std::ostream& operator<<(std::ostream& os, const QuadScalar& s);

 private:
  static int common_radicand(const QuadScalar& x, const QuadScalar& y);

  mpq_class a_;
  mpq_class b_;
  int d_ = 0;
};

inline int scalar_sign(const QuadScalar& s) { return s.sign(); }

/// True when d is 0 or a square-free integer >= 2.
bool is_valid_radicand(long d);

}  // namespace billiards
