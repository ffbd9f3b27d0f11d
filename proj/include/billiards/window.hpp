#pragma once

// Exact sets of straight lines threading a sequence of open segments.
//
// A directed line crosses the open segment (left, right) in the travel
// direction iff `left` lies strictly to its left and `right` strictly to its
// right. A sequence of such gates is therefore feasible iff the left endpoints
// and the right endpoints are strictly separable by one directed line.
//
// Window keeps that set of lines in a dual plane. Once two gates are known
// every feasible direction d satisfies n.d > 0 for a fixed normal n, so each
// line is written uniquely as {p : cross(n + a*rot(n), p) = c} and every
// endpoint constraint becomes an open half-plane in (a, c). The closure of the
// window is a bounded convex polygon whose edges are endpoint constraints: the
// two boundary chains are exactly the left and right chains of the hourglass.
// Adding a gate clips that polygon; the window stays nonempty iff the polygon
// keeps a vertex strictly inside each new half-plane.

#include <optional>
#include <vector>

#include "billiards/geometry.hpp"

namespace billiards {

/// An open segment as seen by lines crossing it in the travel direction.
struct Gate {
  Point2 left;
  Point2 right;
};

class Window {
 public:
  /// Lines crossing a single gate.
  explicit Window(Gate first);

  /// Intersects with the lines also crossing `gate` after all previous ones.
  /// Returns false (and leaves the window empty) when no line survives.
  bool add_gate(const Gate& gate);

  bool empty() const { return empty_; }
  std::size_t gate_count() const { return gates_; }

  /// Number of boundary edges of the dual polygon (0 before two gates).
  std::size_t boundary_size() const { return polygon_.size(); }

  /// True when the directed line through `from` with direction `direction`
  /// passes strictly through every gate added so far. Independent of the
  /// dual representation; used for certificates and tests.
  static bool line_threads(const Point2& from, const Vector2& direction,
                           const std::vector<Gate>& gates);

  /// A witness line (point, direction) strictly inside the window, or
  /// nullopt when the window is empty.
  std::optional<std::pair<Point2, Vector2>> witness() const;

 private:
  struct DualPoint {
    QuadScalar a;
    QuadScalar c;
  };

  bool start_polygon(const Gate& second);
  bool clip(const Point2& p, int side);
  QuadScalar evaluate(const DualPoint& v, const QuadScalar& coeff_a,
                      const QuadScalar& constant, int side) const;

  Gate first_;
  std::size_t gates_ = 1;
  bool empty_ = false;
  Vector2 normal_;
  Vector2 normal_perp_;
  std::vector<DualPoint> polygon_;
};

/// Open cone of directions from a fixed apex for which the ray threads every
/// gate added so far. Before any gate the cone is unrestricted.
class DirectionCone {
 public:
  explicit DirectionCone(Point2 apex) : apex_(std::move(apex)) {}

  bool add_gate(const Gate& gate);
  bool empty() const { return empty_; }
  bool bounded() const { return bounded_; }

  /// True when target - apex lies strictly inside the cone.
  bool contains(const Point2& target) const;

  const Point2& apex() const { return apex_; }
  const Vector2& clockwise_ray() const { return lo_; }
  const Vector2& counterclockwise_ray() const { return hi_; }

 private:
  bool restrict_to(const Vector2& u);

  Point2 apex_;
  Vector2 lo_;
  Vector2 hi_;
  bool bounded_ = false;
  bool empty_ = false;
};

}  // namespace billiards
