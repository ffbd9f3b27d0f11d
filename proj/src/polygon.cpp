#include "billiards/polygon.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace billiards {

std::string_view to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::kOk: return "ok";
    case ValidationCode::kTooFewVertices: return "too-few-vertices";
    case ValidationCode::kMixedField: return "mixed-field";
    case ValidationCode::kRepeatedVertex: return "repeated-vertex";
    case ValidationCode::kCollinearTriple: return "collinear-triple";
    case ValidationCode::kOrientation: return "orientation";
    case ValidationCode::kNonConvex: return "non-convex";
    case ValidationCode::kSelfIntersecting: return "self-intersecting";
  }
  return "unknown";
}

namespace {

ValidationReport failure(ValidationCode code, std::size_t vertex, std::string detail) {
  std::string message(to_string(code));
  message += " at vertex " + std::to_string(vertex) + ": " + detail;
  return {code, vertex, std::move(message)};
}

int field_of(std::span<const Point2> vertices) {
  int d = 0;
  for (const auto& v : vertices) {
    for (const QuadScalar* s : {&v.x, &v.y}) {
      if (s->is_rational()) continue;
      if (d != 0 && d != s->radicand()) return -1;
      d = s->radicand();
    }
  }
  return d;
}

}  // namespace

ValidationReport validate(std::span<const Point2> vertices) {
  const std::size_t r = vertices.size();
  if (r < 3) {
    return failure(ValidationCode::kTooFewVertices, 0,
                   "need at least 3 vertices, got " + std::to_string(r));
  }
  if (field_of(vertices) < 0) {
    return failure(ValidationCode::kMixedField, 0, "coordinates use different radicands");
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (vertices[i] == vertices[j]) {
        return failure(ValidationCode::kRepeatedVertex, j,
                       "duplicates vertex " + std::to_string(i));
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (orient(vertices[(i + r - 1) % r], vertices[i], vertices[(i + 1) % r]) == 0) {
      return failure(ValidationCode::kCollinearTriple, i, "neighbours are collinear");
    }
  }
  QuadScalar twice_area;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& p = vertices[i];
    const auto& q = vertices[(i + 1) % r];
    twice_area += p.x * q.y - q.x * p.y;
  }
  if (twice_area.sign() <= 0) {
    return failure(ValidationCode::kOrientation, 0, "vertices are not counterclockwise");
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (orient(vertices[(i + r - 1) % r], vertices[i], vertices[(i + 1) % r]) < 0) {
      return failure(ValidationCode::kNonConvex, i, "reflex turn");
    }
  }
  // All turns are left; a winding number above one shows up as crossing edges.
  for (std::size_t i = 0; i < r; ++i) {
    const Segment e(vertices[i], vertices[(i + 1) % r]);
    for (std::size_t j = i + 2; j < r; ++j) {
      if (i == 0 && j == r - 1) continue;
      const Segment f(vertices[j], vertices[(j + 1) % r]);
      if (segments_intersect(e, f)) {
        return failure(ValidationCode::kSelfIntersecting, i,
                       "edge " + std::to_string(i) + " meets edge " + std::to_string(j));
      }
    }
  }
  return {};
}

Polygon::Polygon(std::vector<Point2> vertices, int field)
    : vertices_(std::move(vertices)), field_(field) {
  const std::size_t r = vertices_.size();
  reflections_.reserve(r);
  QuadScalar sx, sy;
  for (std::size_t i = 0; i < r; ++i) {
    reflections_.push_back(reflect_across(vertices_[i], vertices_[(i + 1) % r]));
    sx += vertices_[i].x;
    sy += vertices_[i].y;
  }
  const QuadScalar n(static_cast<long>(r));
  centroid_ = {sx / n, sy / n};
}

Polygon Polygon::from_vertices(std::vector<Point2> vertices) {
  ValidationReport report = validate(vertices);
  if (!report.ok()) throw PolygonError(std::move(report));
  const auto first = std::min_element(vertices.begin(), vertices.end(), lex_less);
  std::rotate(vertices.begin(), first, vertices.end());
  const int field = field_of(vertices);
  return Polygon(std::move(vertices), field);
}

Segment Polygon::edge(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("edge index " + std::to_string(i));
  return Segment(vertices_[i], vertices_[(i + 1) % size()]);
}

const AffineIsometry& Polygon::edge_reflection(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("edge index " + std::to_string(i));
  return reflections_[i];
}

QuadScalar squared_edge_length(const Polygon& polygon, std::size_t i) {
  const Segment e = polygon.edge(i);
  const Vector2 u = e.q() - e.p();
  return dot(u, u);
}

Polygon catalog(std::string_view name) {
  const QuadScalar half(mpq_class(1, 2));
  const QuadScalar root3 = QuadScalar::sqrt_of(3);
  if (name == "square") {
    return Polygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  }
  if (name == "equilateral") {
    return Polygon::from_vertices({{0, 0}, {1, 0}, {half, half * root3}});
  }
  if (name == "right-isosceles") {
    return Polygon::from_vertices({{0, 0}, {1, 0}, {0, 1}});
  }
  if (name == "half-equilateral") {
    return Polygon::from_vertices({{0, 0}, {1, 0}, {0, root3}});
  }
  throw std::invalid_argument("unknown catalog polygon '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"square", "equilateral", "right-isosceles", "half-equilateral"};
}

Polygon random_convex_quadrilateral(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(0, 12);
  for (;;) {
    std::vector<Point2> pts;
    for (int k = 0; k < 4; ++k) pts.push_back({coord(rng), coord(rng)});
    // Try the three cyclic orders of four points and their reversals.
    const int orders[3][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
    for (const auto& order : orders) {
      std::vector<Point2> quad;
      for (int k : order) quad.push_back(pts[k]);
      for (int pass = 0; pass < 2; ++pass) {
        if (validate(quad).ok()) return Polygon::from_vertices(std::move(quad));
        std::reverse(quad.begin(), quad.end());
      }
    }
  }
}

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

Polygon read_polygon(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_field = false;
  long field = 0;
  std::vector<Point2> vertices;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(strip_comment(line));
    std::string tag;
    if (!(tokens >> tag)) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tag == "QFIELD") {
      if (have_field) throw std::invalid_argument(where + "duplicate QFIELD");
      if (!vertices.empty()) throw std::invalid_argument(where + "QFIELD must precede vertices");
      if (!(tokens >> field) || !is_valid_radicand(field)) {
        throw std::invalid_argument(where + "QFIELD needs 0 or a square-free integer >= 2");
      }
      have_field = true;
    } else if (tag == "V") {
      if (!have_field) throw std::invalid_argument(where + "vertex before QFIELD");
      std::string xs, ys;
      if (!(tokens >> xs >> ys)) throw std::invalid_argument(where + "V needs two scalars");
      try {
        Point2 p{QuadScalar::parse(xs), QuadScalar::parse(ys)};
        for (const QuadScalar* s : {&p.x, &p.y}) {
          if (!s->is_rational() && s->radicand() != field) {
            throw std::invalid_argument("scalar outside QFIELD " + std::to_string(field));
          }
        }
        vertices.push_back(std::move(p));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + e.what());
      }
    } else {
      throw std::invalid_argument(where + "unknown record '" + tag + "'");
    }
    std::string extra;
    if (tokens >> extra) throw std::invalid_argument(where + "trailing token '" + extra + "'");
  }
  if (!have_field) throw std::invalid_argument("missing QFIELD line");
  return Polygon::from_vertices(std::move(vertices));
}

Polygon load_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open polygon file " + path.string());
  return read_polygon(in);
}

void write_polygon(std::ostream& out, const Polygon& polygon) {
  out << "QFIELD " << polygon.field() << '\n';
  for (const auto& v : polygon.vertices()) {
    out << "V " << v.x.to_string() << ' ' << v.y.to_string() << '\n';
  }
}

}  // namespace billiards
