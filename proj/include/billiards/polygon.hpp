#pragma once

// Strictly convex billiard tables with deterministic edge labels.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "billiards/geometry.hpp"

namespace billiards {

enum class ValidationCode {
  kOk = 0,
  kTooFewVertices,
  kMixedField,
  kRepeatedVertex,
  kCollinearTriple,
  kOrientation,
  kNonConvex,
  kSelfIntersecting,
};

std::string_view to_string(ValidationCode code);

struct ValidationReport {
  ValidationCode code = ValidationCode::kOk;
  std::size_t vertex = 0;  // first offending vertex, when meaningful
  std::string message;

  bool ok() const { return code == ValidationCode::kOk; }
};

/// Checks, in order: vertex count, common field, repeated vertices, collinear
/// consecutive triples, counterclockwise orientation, convexity, simplicity.
/// Reports the first violation.
ValidationReport validate(std::span<const Point2> vertices);

class PolygonError : public std::runtime_error {
 public:
  explicit PolygonError(ValidationReport report)
      : std::runtime_error(report.message), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Strictly convex polygon, vertices counterclockwise starting from the
/// lexicographically smallest one. Edge i joins vertex i to vertex i+1 (mod r)
/// and carries the letter i of the coding alphabet.
class Polygon {
 public:
  /// Validates and relabels; throws PolygonError on invalid input.
  static Polygon from_vertices(std::vector<Point2> vertices);

  std::size_t size() const { return vertices_.size(); }
  int field() const { return field_; }
  const std::vector<Point2>& vertices() const { return vertices_; }
  const Point2& vertex(std::size_t i) const { return vertices_[i % size()]; }
  Segment edge(std::size_t i) const;

  /// Reflection across the line supporting edge i; throws std::out_of_range.
  const AffineIsometry& edge_reflection(std::size_t i) const;

  /// Vertex average; strictly interior.
  const Point2& centroid() const { return centroid_; }

 private:
  Polygon(std::vector<Point2> vertices, int field);

  std::vector<Point2> vertices_;
  int field_ = 0;
  std::vector<AffineIsometry> reflections_;
  Point2 centroid_;
};

/// Built-in tiling tables: square, equilateral, right-isosceles,
/// half-equilateral. Throws std::invalid_argument for other names.
Polygon catalog(std::string_view name);
std::vector<std::string> catalog_names();

/// Squared length of edge i (exact).
QuadScalar squared_edge_length(const Polygon& polygon, std::size_t i);

/// Convex quadrilateral with small integer coordinates drawn from a seeded
/// generator; reproducible for a given seed.
Polygon random_convex_quadrilateral(std::uint64_t seed);

/// Polygon file: `QFIELD <d>` then `V <x> <y>` lines, `#` comments.
/// Throws std::invalid_argument on syntax errors and PolygonError on invalid
/// geometry.
Polygon read_polygon(std::istream& in);
Polygon load_polygon_file(const std::filesystem::path& path);
void write_polygon(std::ostream& out, const Polygon& polygon);

}  // namespace billiards
