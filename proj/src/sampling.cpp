#include <random>

#include "billiards/language.hpp"

namespace billiards {

namespace {

constexpr long kDirectionRange = 1000;
constexpr long kFootDenominator = 1009;
constexpr int kMaxResamples = 1000;

// Positive rescaling to coprime integer coordinates (per rational/irrational
// part), which keeps repeated reflections from inflating the numbers.
Vector2 primitive_direction(const Vector2& d) {
  const mpq_class* parts[] = {&d.x.rational_part(), &d.x.irrational_part(),
                              &d.y.rational_part(), &d.y.irrational_part()};
  mpz_class lcm_den = 1;
  for (const mpq_class* q : parts) lcm_den = lcm(lcm_den, q->get_den());
  mpz_class g = 0;
  for (const mpq_class* q : parts) g = gcd(g, mpz_class(q->get_num() * (lcm_den / q->get_den())));
  const QuadScalar k(mpq_class(lcm_den, g));
  return {k * d.x, k * d.y};
}

// Follows one trajectory; returns false on a vertex hit.
bool shoot(const Polygon& polygon, std::size_t n, int edge, const Point2& foot, Vector2 d,
           Word& code) {
  const std::size_t r = polygon.size();
  const auto& v = polygon.vertices();
  code = Word{edge};
  Point2 x = foot;
  std::vector<QuadScalar> side(r);
  while (code.size() < n) {
    for (std::size_t i = 0; i < r; ++i) {
      side[i] = cross(d, v[i] - x);
      if (side[i].sign() == 0) return false;
    }
    std::size_t exit = r;
    for (std::size_t i = 0; i < r; ++i) {
      if (side[i].sign() < 0 && side[(i + 1) % r].sign() > 0) exit = i;
    }
    if (exit == r) return false;
    const Point2& a = v[exit];
    const Point2& b = v[(exit + 1) % r];
    const Vector2 e = b - a;
    const QuadScalar t = side[exit] / (side[exit] - side[(exit + 1) % r]);
    x = a + t * e;
    // Mirror law: keep the tangential component, flip the normal one.
    d = primitive_direction((QuadScalar(2) * dot(d, e) / dot(e, e)) * e - d);
    code.push_back(static_cast<int>(exit));
  }
  return true;
}

}  // namespace

std::set<Word> sample_words(const Polygon& polygon, std::size_t n, std::uint64_t trials,
                            std::uint64_t seed) {
  std::set<Word> out;
  if (n == 0 || trials == 0) return out;
  std::mt19937_64 rng(seed);
  const std::size_t r = polygon.size();
  std::uniform_int_distribution<int> pick_edge(0, static_cast<int>(r) - 1);
  std::uniform_int_distribution<long> pick_foot(1, kFootDenominator - 1);
  std::uniform_int_distribution<long> pick_dir(-kDirectionRange, kDirectionRange);

  Word code;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
      const int edge = pick_edge(rng);
      const Point2& a = polygon.vertex(edge);
      const Point2& b = polygon.vertex(edge + 1);
      const QuadScalar t(mpq_class(pick_foot(rng), kFootDenominator));
      const Point2 foot = a + t * (b - a);
      const Vector2 d{pick_dir(rng), pick_dir(rng)};
      if (cross(b - a, d).sign() <= 0) continue;  // must point into the table
      if (shoot(polygon, n, edge, foot, d, code)) {
        out.insert(code);
        break;
      }
    }
  }
  return out;
}

}  // namespace billiards
