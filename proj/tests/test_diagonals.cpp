#include <doctest.h>

#include <map>
#include <set>

#include "billiards/diagonals.hpp"

using namespace billiards;

namespace {

std::vector<Polygon> test_polygons() {
  std::vector<Polygon> out;
  for (const auto& name : catalog_names()) out.push_back(catalog(name));
  out.push_back(random_convex_quadrilateral(1));
  out.push_back(random_convex_quadrilateral(2));
  return out;
}

// Independent check of a listed diagonal: unfold its code and test that the
// segment crosses every open gate strictly, in the travel direction.
bool segment_is_diagonal(const Polygon& polygon, const GeneralizedDiagonal& d) {
  const Point2& a = polygon.vertex(d.start);
  const Vector2 dir = d.end - a;
  UnfoldedCopy copy = UnfoldedCopy::of(polygon, AffineIsometry::identity());
  std::vector<Gate> gates;
  for (std::size_t i = 0; i < d.code.size(); ++i) {
    gates.push_back(copy.exit_gate(d.code[i]));
    copy = copy.across(polygon, d.code[i]);
  }
  if (copy.vertices[d.end_vertex] != d.end) return false;
  // the segment must cross each open gate strictly between its endpoints,
  // and no gate beyond the end
  for (const Gate& g : gates) {
    if (orient(a, d.end, g.left) != 1 || orient(a, d.end, g.right) != -1) return false;
    if (orient(g.left, g.right, a) != -1 || orient(g.left, g.right, d.end) != 1) return false;
  }
  // sides are not diagonals
  const std::size_t r = polygon.size();
  const std::size_t s = static_cast<std::size_t>(d.start), e = static_cast<std::size_t>(d.end_vertex);
  return !d.code.empty() || ((s + 1) % r != e && (e + 1) % r != s);
}

}  // namespace

TEST_CASE("square diagonal counts") {
  const Polygon square = catalog("square");
  const DiagonalTable t = enumerate_diagonals(square, 2);
  CHECK(t.exact_links[1] == 4);
  CHECK(t.exact_links[2] == 8);
  CHECK(t.cumulative(0) == 4);
  CHECK(t.cumulative(1) == 8);
  CHECK(t.cumulative(2) == 16);
  CHECK_THROWS_AS(t.cumulative(3), std::out_of_range);
  CHECK(gd(square, Word{0}) == 2);
  CHECK(gd(square, Word{}) == 4);
  CHECK(t.gd(Word{0}) == 2);
  CHECK(t.gd(Word{}) == 4);
  CHECK_THROWS_AS(enumerate_diagonals(square, 0), std::invalid_argument);
}

TEST_CASE("triangles have no one-link diagonals") {
  for (const char* name : {"equilateral", "right-isosceles", "half-equilateral"}) {
    const DiagonalTable t = enumerate_diagonals(catalog(name), 1);
    CHECK(t.exact_links[1] == 0);
    CHECK(t.cumulative(1) == 3);
  }
}

TEST_CASE("listed diagonals are genuine and sorted by start") {
  for (const Polygon& p : test_polygons()) {
    DiagonalOptions opts;
    opts.keep_list = true;
    const DiagonalTable t = enumerate_diagonals(p, 7, opts);
    std::uint64_t total = 0;
    for (std::size_t l = 1; l <= 7; ++l) total += t.exact_links[l];
    REQUIRE(t.diagonals.size() == total);
    std::set<std::tuple<int, Word, int>> seen;
    for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
      const auto& d = t.diagonals[i];
      CHECK(segment_is_diagonal(p, d));
      CHECK(seen.insert({d.start, d.code, d.end_vertex}).second);
      if (i > 0) CHECK(t.diagonals[i - 1].start <= d.start);
    }
  }
}

TEST_CASE("diagonal codes are in the language") {
  for (const Polygon& p : test_polygons()) {
    const DiagonalTable t = enumerate_diagonals(p, 7);
    for (const auto& [code, count] : t.by_code) {
      if (!code.empty()) CHECK(word_feasible(p, code));
    }
  }
}

TEST_CASE("time reversal: gd(v) = gd(reverse v)") {
  for (const Polygon& p : test_polygons()) {
    const DiagonalTable t = enumerate_diagonals(p, 9);
    for (const auto& [code, count] : t.by_code) CHECK(t.gd(code.reversed()) == count);
  }
}

TEST_CASE("table and direct visibility agree") {
  for (const Polygon& p : test_polygons()) {
    const DiagonalTable t = enumerate_diagonals(p, 5);
    for (const auto& [code, count] : t.by_code) CHECK(gd(p, code) == count);
    CHECK(diagonals_with_code(p, Word{0, 0}).empty());
  }
}

TEST_CASE("threads do not change the table") {
  const Polygon q = random_convex_quadrilateral(1);
  DiagonalOptions one, many;
  many.threads = 4;
  const DiagonalTable a = enumerate_diagonals(q, 8, one);
  const DiagonalTable b = enumerate_diagonals(q, 8, many);
  CHECK(a.exact_links == b.exact_links);
  CHECK(a.by_code == b.by_code);
}

TEST_CASE("index and lemma") {
  const Polygon square = catalog("square");
  const WordIndex i0 = index_of(square, Word{0});
  CHECK(i0.left_excess == 2);
  CHECK(i0.right_excess == 2);
  CHECK(i0.diagonals == 2);
  const WordIndex ie = index_of(square, Word{});
  CHECK(ie.left_excess == 3);
  CHECK(ie.right_excess == 3);
  CHECK(ie.diagonals == 4);
  {
    EnumerationOptions opts;
    opts.mode = EnumerationMode::kStore;
    const LanguageTable t = enumerate_language(square, 3, opts);
    std::set<Word> bispecial;
    for (const auto& b : bispecial_words(square, 3)) bispecial.insert(b.word);
    REQUIRE(bispecial.size() < t.words[3].size());
    for (const Word& w : t.words[3]) {
      if (bispecial.count(w)) CHECK(index_of(square, w).diagonals == gd(square, w));
      else CHECK_THROWS_AS(index_of(square, w), std::invalid_argument);
    }
  }

  const auto r1 = verify_geometric_lemma(square, 1);
  CHECK(r1.holds);
  REQUIRE(r1.checks.size() == 4);
  CHECK(r1.checks[0].word.counts == ExtensionCounts{3, 3, 7});
  CHECK(r1.checks[0].gd == 2);
  CHECK(r1.checks[0].expected == 7);

  const auto r0 = verify_geometric_lemma(square, 0);
  CHECK(r0.holds);
  REQUIRE(r0.checks.size() == 1);
  CHECK(r0.checks[0].word.counts.both == 12);

  for (const Polygon& p : test_polygons()) {
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto r = verify_geometric_lemma(p, n);
      CHECK(r.holds);
      for (const auto& c : r.checks) {
        if (c.gd == 0 && n > 0) CHECK(c.word.counts.both == c.word.counts.left + c.word.counts.right - 1);
      }
    }
  }
}

TEST_CASE("complexity equals summed diagonal counts") {
  for (const Polygon& p : test_polygons()) {
    const auto r = verify_complexity_sum(p, 10);
    CHECK(r.holds);
    CHECK(r.rows.size() == 10);
    CHECK(r.rows.front().complexity == p.size());
  }
  const auto sq = verify_complexity_sum(catalog("square"), 3);
  CHECK(sq.rows[2].complexity == 28);
  CHECK(sq.rows[2].diagonal_sum == 4 + 8 + 16);
}
