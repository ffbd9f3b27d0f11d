#pragma once

// Planar points, vectors and isometries over a quadratic field, plus the
// orientation predicate everything else is built on.

#include <array>
#include <iosfwd>

#include "billiards/quad_scalar.hpp"

namespace billiards {

struct Vector2 {
  QuadScalar x;
  QuadScalar y;

  friend bool operator==(const Vector2&, const Vector2&) = default;
  Vector2 operator-() const { return {-x, -y}; }
  friend Vector2 operator+(const Vector2& u, const Vector2& v) { return {u.x + v.x, u.y + v.y}; }
  friend Vector2 operator-(const Vector2& u, const Vector2& v) { return {u.x - v.x, u.y - v.y}; }
  friend Vector2 operator*(const QuadScalar& k, const Vector2& v) { return {k * v.x, k * v.y}; }
};

struct Point2 {
  QuadScalar x;
  QuadScalar y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend Vector2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point2 operator+(const Point2& p, const Vector2& v) { return {p.x + v.x, p.y + v.y}; }
  friend Point2 operator-(const Point2& p, const Vector2& v) { return {p.x - v.x, p.y - v.y}; }
};

std::ostream& operator<<(std::ostream& os, const Point2& p);

inline QuadScalar cross(const Vector2& u, const Vector2& v) { return u.x * v.y - u.y * v.x; }
inline QuadScalar dot(const Vector2& u, const Vector2& v) { return u.x * v.x + u.y * v.y; }
inline Vector2 rotate_ccw(const Vector2& v) { return {-v.y, v.x}; }

/// Lexicographic (x, then y) strict comparison.
bool lex_less(const Point2& p, const Point2& q);

/// Sign of (q - p) x (r - p); +1 when p, q, r turn counterclockwise.
int orient(const Point2& p, const Point2& q, const Point2& r);

/// Closed segment with distinct endpoints.
class Segment {
 public:
  Segment(Point2 p, Point2 q);
  const Point2& p() const { return p_; }
  const Point2& q() const { return q_; }

 private:
  Point2 p_;
  Point2 q_;
};

/// True when the closed segments share at least one point.
bool segments_intersect(const Segment& s, const Segment& t);

/// x -> M x + t with M orthogonal.
class AffineIsometry {
 public:
  static AffineIsometry identity();

  /// Builds from row-major linear part and translation; throws
  /// std::invalid_argument unless the linear part is exactly orthogonal.
  AffineIsometry(std::array<QuadScalar, 4> linear, Vector2 translation);

  Point2 apply(const Point2& p) const;
  Vector2 apply(const Vector2& v) const;

  /// (*this) o inner: apply inner first.
  AffineIsometry compose(const AffineIsometry& inner) const;

  /// +1 for rotations, -1 for reflections.
  int determinant_sign() const;
  bool is_identity() const;

  const std::array<QuadScalar, 4>& linear() const { return m_; }
  const Vector2& translation() const { return t_; }

  friend bool operator==(const AffineIsometry&, const AffineIsometry&) = default;

 private:
  struct Unchecked {};
  AffineIsometry(Unchecked, std::array<QuadScalar, 4> linear, Vector2 translation)
      : m_(std::move(linear)), t_(std::move(translation)) {}

  std::array<QuadScalar, 4> m_;
  Vector2 t_;
};

/// Euclidean reflection fixing the line through p and q (p != q).
AffineIsometry reflect_across(const Point2& p, const Point2& q);

}  // namespace billiards
