#include "billiards/window.hpp"

#include <stdexcept>

namespace billiards {

Window::Window(Gate first) : first_(std::move(first)) {
  if (first_.left == first_.right) throw std::invalid_argument("degenerate gate");
}

QuadScalar Window::evaluate(const DualPoint& v, const QuadScalar& coeff_a,
                            const QuadScalar& constant, int side) const {
  QuadScalar f = constant + v.a * coeff_a - v.c;
  return side > 0 ? f : -f;
}

bool Window::clip(const Point2& p, int side) {
  const Vector2 pv{p.x, p.y};
  const QuadScalar coeff_a = cross(normal_perp_, pv);
  const QuadScalar constant = cross(normal_, pv);

  const std::size_t m = polygon_.size();
  std::vector<QuadScalar> values;
  values.reserve(m);
  bool any_inside = false;
  bool any_outside = false;
  for (const auto& v : polygon_) {
    values.push_back(evaluate(v, coeff_a, constant, side));
    const int s = values.back().sign();
    any_inside |= s > 0;
    any_outside |= s < 0;
  }
  if (!any_inside) {
    empty_ = true;
    polygon_.clear();
    return false;
  }
  if (!any_outside) return true;

  std::vector<DualPoint> out;
  out.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const int si = values[i].sign();
    const int sj = values[j].sign();
    if (si >= 0) out.push_back(polygon_[i]);
    if (si * sj < 0) {
      const QuadScalar t = values[i] / (values[i] - values[j]);
      out.push_back({polygon_[i].a + t * (polygon_[j].a - polygon_[i].a),
                     polygon_[i].c + t * (polygon_[j].c - polygon_[i].c)});
    }
  }
  polygon_ = std::move(out);
  return true;
}

bool Window::start_polygon(const Gate& second) {
  // Directions of lines meeting both closed gates, in order, span the cone of
  // endpoint differences.
  std::vector<Vector2> diffs;
  for (const Point2* q : {&second.left, &second.right}) {
    for (const Point2* p : {&first_.left, &first_.right}) {
      if (*p != *q) diffs.push_back(*q - *p);
    }
  }
  const Vector2* cw = nullptr;
  const Vector2* ccw = nullptr;
  for (const auto& e : diffs) {
    bool is_cw = true;
    bool is_ccw = true;
    for (const auto& v : diffs) {
      const int s = cross(e, v).sign();
      if (s < 0) is_cw = false;
      if (s > 0) is_ccw = false;
      if (s == 0 && dot(e, v).sign() < 0) is_cw = is_ccw = false;
    }
    if (is_cw && cw == nullptr) cw = &e;
    if (is_ccw && ccw == nullptr) ccw = &e;
  }
  if (cw == nullptr || ccw == nullptr) return false;
  normal_ = rotate_ccw(*ccw - *cw);
  if (dot(normal_, *cw).sign() < 0) normal_ = -normal_;
  if (dot(normal_, *cw).sign() <= 0) return false;  // gates share a line
  normal_perp_ = rotate_ccw(normal_);

  const QuadScalar scale = dot(*cw, normal_).inverse();
  QuadScalar a_lo = dot(*cw, normal_perp_) * scale;
  QuadScalar a_hi = dot(*ccw, normal_perp_) * scale;
  if (a_hi < a_lo) std::swap(a_lo, a_hi);

  std::optional<QuadScalar> c_lo, c_hi;
  for (const QuadScalar* a : {&a_lo, &a_hi}) {
    const Vector2 d = normal_ + (*a) * normal_perp_;
    for (const Point2* p : {&first_.left, &first_.right}) {
      QuadScalar c = cross(d, Vector2{p->x, p->y});
      if (!c_lo || c < *c_lo) c_lo = c;
      if (!c_hi || *c_hi < c) c_hi = c;
    }
  }
  polygon_ = {{a_lo, *c_lo}, {a_hi, *c_lo}, {a_hi, *c_hi}, {a_lo, *c_hi}};
  return clip(first_.left, +1) && clip(first_.right, -1) && clip(second.left, +1) &&
         clip(second.right, -1);
}

bool Window::add_gate(const Gate& gate) {
  if (empty_) return false;
  if (gate.left == gate.right) throw std::invalid_argument("degenerate gate");
  ++gates_;
  if (gates_ == 2) {
    if (!start_polygon(gate)) {
      empty_ = true;
      polygon_.clear();
    }
    return !empty_;
  }
  return clip(gate.left, +1) && clip(gate.right, -1);
}

std::optional<std::pair<Point2, Vector2>> Window::witness() const {
  if (empty_) return std::nullopt;
  if (gates_ == 1) {
    const Point2 mid{(first_.left.x + first_.right.x) * QuadScalar(mpq_class(1, 2)),
                     (first_.left.y + first_.right.y) * QuadScalar(mpq_class(1, 2))};
    return std::make_pair(mid, rotate_ccw(first_.right - first_.left));
  }
  QuadScalar a, c;
  for (const auto& v : polygon_) {
    a += v.a;
    c += v.c;
  }
  const QuadScalar inv_m = QuadScalar(static_cast<long>(polygon_.size())).inverse();
  a *= inv_m;
  c *= inv_m;
  const Vector2 d = normal_ + a * normal_perp_;
  const Vector2 foot = (c / dot(d, d)) * rotate_ccw(d);
  return std::make_pair(Point2{foot.x, foot.y}, d);
}

bool Window::line_threads(const Point2& from, const Vector2& direction,
                          const std::vector<Gate>& gates) {
  for (const auto& g : gates) {
    if (cross(direction, g.left - from).sign() <= 0) return false;
    if (cross(direction, g.right - from).sign() >= 0) return false;
  }
  return true;
}

bool DirectionCone::restrict_to(const Vector2& u) {
  if (u.x.sign() == 0 && u.y.sign() == 0) {
    empty_ = true;
    return false;
  }
  const int c1 = cross(lo_, u).sign();
  const int c2 = cross(hi_, u).sign();
  if (c1 >= 0 && c2 >= 0) return true;
  if (c1 <= 0 && c2 <= 0) {
    empty_ = true;
    return false;
  }
  if (c1 > 0) {
    hi_ = u;
  } else {
    lo_ = -u;
  }
  return true;
}

bool DirectionCone::add_gate(const Gate& gate) {
  if (empty_) return false;
  if (!bounded_) {
    lo_ = gate.right - apex_;
    hi_ = gate.left - apex_;
    bounded_ = true;
    if (cross(lo_, hi_).sign() <= 0) empty_ = true;
    return !empty_;
  }
  return restrict_to(gate.left - apex_) && restrict_to(apex_ - gate.right);
}

bool DirectionCone::contains(const Point2& target) const {
  if (empty_) return false;
  const Vector2 v = target - apex_;
  if (!bounded_) return v.x.sign() != 0 || v.y.sign() != 0;
  return cross(lo_, v).sign() > 0 && cross(v, hi_).sign() > 0;
}

}  // namespace billiards
