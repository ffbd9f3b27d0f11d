#include "billiards/geometry.hpp"

#include <ostream>
#include <stdexcept>

namespace billiards {

std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

bool lex_less(const Point2& p, const Point2& q) {
  const int sx = (p.x - q.x).sign();
  if (sx != 0) return sx < 0;
  return (p.y - q.y).sign() < 0;
}

int orient(const Point2& p, const Point2& q, const Point2& r) {
  return cross(q - p, r - p).sign();
}

Segment::Segment(Point2 p, Point2 q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == q_) throw std::invalid_argument("degenerate segment");
}

namespace {

// r is known to be collinear with s; is it within the closed box of s?
bool on_collinear_segment(const Segment& s, const Point2& r) {
  const auto within = [](const QuadScalar& a, const QuadScalar& b, const QuadScalar& v) {
    return (v - a).sign() * (v - b).sign() <= 0;
  };
  return within(s.p().x, s.q().x, r.x) && within(s.p().y, s.q().y, r.y);
}

}  // namespace

bool segments_intersect(const Segment& s, const Segment& t) {
  const int o1 = orient(s.p(), s.q(), t.p());
  const int o2 = orient(s.p(), s.q(), t.q());
  const int o3 = orient(t.p(), t.q(), s.p());
  const int o4 = orient(t.p(), t.q(), s.q());
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_collinear_segment(s, t.p())) return true;
  if (o2 == 0 && on_collinear_segment(s, t.q())) return true;
  if (o3 == 0 && on_collinear_segment(t, s.p())) return true;
  if (o4 == 0 && on_collinear_segment(t, s.q())) return true;
  return false;
}

AffineIsometry AffineIsometry::identity() {
  return AffineIsometry(Unchecked{}, {QuadScalar(1), QuadScalar(0), QuadScalar(0), QuadScalar(1)},
                        Vector2{});
}

AffineIsometry::AffineIsometry(std::array<QuadScalar, 4> linear, Vector2 translation)
    : m_(std::move(linear)), t_(std::move(translation)) {
  // M^T M = I, exactly.
  const QuadScalar c00 = m_[0] * m_[0] + m_[2] * m_[2];
  const QuadScalar c01 = m_[0] * m_[1] + m_[2] * m_[3];
  const QuadScalar c11 = m_[1] * m_[1] + m_[3] * m_[3];
  if (c00 != QuadScalar(1) || c01 != QuadScalar(0) || c11 != QuadScalar(1)) {
    throw std::invalid_argument("linear part is not orthogonal");
  }
}

Point2 AffineIsometry::apply(const Point2& p) const {
  return {m_[0] * p.x + m_[1] * p.y + t_.x, m_[2] * p.x + m_[3] * p.y + t_.y};
}

Vector2 AffineIsometry::apply(const Vector2& v) const {
  return {m_[0] * v.x + m_[1] * v.y, m_[2] * v.x + m_[3] * v.y};
}

AffineIsometry AffineIsometry::compose(const AffineIsometry& inner) const {
  const auto& a = m_;
  const auto& b = inner.m_;
  std::array<QuadScalar, 4> m{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                              a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  Vector2 t = apply(inner.t_) + t_;
  return AffineIsometry(Unchecked{}, std::move(m), std::move(t));
}

int AffineIsometry::determinant_sign() const { return (m_[0] * m_[3] - m_[1] * m_[2]).sign(); }

bool AffineIsometry::is_identity() const { return *this == identity(); }

AffineIsometry reflect_across(const Point2& p, const Point2& q) {
  if (p == q) throw std::invalid_argument("reflection line needs two distinct points");
  const Vector2 u = q - p;
  const QuadScalar inv = (u.x * u.x + u.y * u.y).inverse();
  const QuadScalar cos2 = (u.x * u.x - u.y * u.y) * inv;
  const QuadScalar sin2 = QuadScalar(2) * u.x * u.y * inv;
  std::array<QuadScalar, 4> m{cos2, sin2, sin2, -cos2};
  // Fix p: t = p - M p.
  const Vector2 mp{m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y};
  Vector2 t{p.x - mp.x, p.y - mp.y};
  return AffineIsometry(std::move(m), std::move(t));
}

}  // namespace billiards
