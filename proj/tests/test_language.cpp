#include <doctest.h>

#include <numeric>
#include <set>
#include <unordered_set>

#include "billiards/language.hpp"

using namespace billiards;

namespace {

std::uint64_t phi(std::uint64_t n) {
  std::uint64_t out = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    out -= out / p;
  }
  if (n > 1) out -= out / n;
  return out;
}

// 4 * sum_{i=1..n} (n - i + 1) phi(i)
std::uint64_t square_oracle(std::uint64_t n) {
  std::uint64_t sum = 0;
  for (std::uint64_t i = 1; i <= n; ++i) sum += (n - i + 1) * phi(i);
  return 4 * sum;
}

std::vector<Polygon> test_polygons() {
  std::vector<Polygon> out;
  for (const auto& name : catalog_names()) out.push_back(catalog(name));
  out.push_back(random_convex_quadrilateral(1));
  out.push_back(random_convex_quadrilateral(2));
  return out;
}

LanguageTable stored(const Polygon& p, std::size_t n_max) {
  EnumerationOptions opts;
  opts.mode = EnumerationMode::kStore;
  return enumerate_language(p, n_max, opts);
}

}  // namespace

TEST_CASE("word basics") {
  const Word w = Word::parse("0,2,1");
  CHECK(w.size() == 3);
  CHECK(w[1] == 2);
  CHECK(w.to_string() == "0,2,1");
  CHECK(w.to_string('.') == "0.2.1");
  CHECK(w.reversed() == Word{1, 2, 0});
  CHECK(w.subword(1, 2) == Word{2, 1});
  CHECK(w.prepended(3) == Word{3, 0, 2, 1});
  CHECK(w.appended(3) == Word{0, 2, 1, 3});
  CHECK(Word::parse("").empty());
  CHECK(Word{0, 1} < Word{0, 2});
  CHECK(Word{0} < Word{0, 1});
  CHECK_THROWS_AS(Word::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("a"), std::invalid_argument);
}

TEST_CASE("square feasibility examples") {
  const Polygon square = catalog("square");
  CHECK(word_feasible(square, Word{0}));
  CHECK(word_feasible(square, Word{2, 0, 2}));
  CHECK_FALSE(word_feasible(square, Word{1, 0, 1}));
  CHECK_FALSE(word_feasible(square, Word{0, 0}));
  CHECK(word_feasible(square, Word{}));

  const Corridor c0 = Corridor::start(square, 0);
  CHECK(extend(square, c0, 2).has_value());
  const auto c01 = extend(square, c0, 1);
  REQUIRE(c01.has_value());
  CHECK_THROWS_AS(extend(square, *c01, 1), std::invalid_argument);
  CHECK_THROWS_AS(extend(square, c0, 4), std::invalid_argument);
  const auto c10 = extend(square, Corridor::start(square, 1), 0);
  REQUIRE(c10.has_value());
  CHECK_FALSE(extend(square, *c10, 1).has_value());
}

TEST_CASE("corridor witnesses thread their gates") {
  const Polygon eq = catalog("equilateral");
  const LanguageTable t = stored(eq, 7);
  for (const Word& w : t.words[7]) {
    auto c = std::optional<Corridor>(Corridor::start(eq, w[0]));
    for (std::size_t i = 1; i < w.size(); ++i) c = extend(eq, *c, w[i]);
    REQUIRE(c.has_value());
    const auto line = c->window().witness();
    REQUIRE(line.has_value());
    CHECK(Window::line_threads(line->first, line->second, c->gates()));
  }
}

TEST_CASE("square complexity matches the totient oracle") {
  const LanguageTable t = enumerate_language(catalog("square"), 20);
  CHECK(t.p(0) == 0);
  CHECK(t.p(1) == 4);
  CHECK(t.p(2) == 12);
  CHECK(t.p(3) == 28);
  CHECK(t.p(10) == 540);
  for (std::size_t n = 1; n <= 20; ++n) CHECK(t.p(n) == square_oracle(n));
  CHECK(t.s(1) == 8);
  CHECK(t.s(2) == 16);
  CHECK_THROWS_AS(t.s(20), std::out_of_range);
}

TEST_CASE("store and count modes agree, threads do not change results") {
  for (const Polygon& p : test_polygons()) {
    const LanguageTable a = enumerate_language(p, 9);
    EnumerationOptions opts;
    opts.mode = EnumerationMode::kStore;
    opts.threads = 3;
    const LanguageTable b = enumerate_language(p, 9, opts);
    CHECK(a.complexity == b.complexity);
    for (std::size_t n = 1; n <= 9; ++n) {
      CHECK(b.words[n].size() == b.p(n));
      CHECK(std::is_sorted(b.words[n].begin(), b.words[n].end()));
    }
    CHECK(a.p(1) == p.size());
    for (std::size_t n = 1; n < 9; ++n) CHECK(a.p(n) < a.p(n + 1));
  }
}

TEST_CASE("resource cap") {
  EnumerationOptions opts;
  opts.word_cap = 50;
  CHECK_THROWS_AS(enumerate_language(catalog("square"), 8, opts), ResourceLimitError);
}

TEST_CASE("factoriality, extendability and reversal closure") {
  for (const Polygon& p : test_polygons()) {
    const std::size_t n_max = 9;
    const LanguageTable t = stored(p, n_max);
    std::vector<std::unordered_set<Word, WordHash>> sets(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) sets[n].insert(t.words[n].begin(), t.words[n].end());
    for (std::size_t n = 2; n <= n_max; ++n) {
      std::unordered_set<Word, WordHash> has_left, has_right;
      for (const Word& w : t.words[n]) {
        CHECK(sets[n - 1].count(w.subword(0, n - 1)) == 1);
        CHECK(sets[n - 1].count(w.subword(1, n - 1)) == 1);
        CHECK(sets[n].count(w.reversed()) == 1);
        has_right.insert(w.subword(0, n - 1));
        has_left.insert(w.subword(1, n - 1));
      }
      CHECK(has_right.size() == t.p(n - 1));
      CHECK(has_left.size() == t.p(n - 1));
    }
  }
}

TEST_CASE("feasibility is monotone under extension") {
  const Polygon q = random_convex_quadrilateral(2);
  const LanguageTable t = stored(q, 6);
  std::unordered_set<Word, WordHash> l6(t.words[6].begin(), t.words[6].end());
  // every word of L(5) extended by every admissible letter: feasible iff listed
  for (const Word& w : t.words[5]) {
    for (int b = 0; b < 4; ++b) {
      if (b == w.back()) continue;
      CHECK(word_feasible(q, w.appended(b)) == (l6.count(w.appended(b)) == 1));
    }
  }
}

TEST_CASE("square quarter-turn symmetry") {
  const LanguageTable t = stored(catalog("square"), 9);
  for (std::size_t n = 1; n <= 9; ++n) {
    std::set<Word> rotated;
    for (const Word& w : t.words[n]) {
      Word r;
      for (std::size_t i = 0; i < w.size(); ++i) r.push_back((w[i] + 1) % 4);
      rotated.insert(r);
    }
    CHECK(std::equal(rotated.begin(), rotated.end(), t.words[n].begin(), t.words[n].end()));
  }
}

TEST_CASE("extension counts") {
  const Polygon square = catalog("square");
  CHECK(extension_counts(square, Word{0}) == ExtensionCounts{3, 3, 7});
  CHECK(extension_counts(catalog("equilateral"), Word{0}).left == 2);
  CHECK(extension_counts(catalog("equilateral"), Word{0}).right == 2);
  CHECK(extension_counts(square, Word{}) == ExtensionCounts{4, 4, 12});
  CHECK_THROWS_AS(extension_counts(square, Word{1, 0, 1}), std::invalid_argument);

  for (const Polygon& p : test_polygons()) {
    const LanguageTable t = stored(p, 8);
    for (std::size_t n = 1; n + 2 <= 8; ++n) {
      const auto index = extension_index(t, n);
      CHECK(index.size() == t.p(n));
      // s(n) = sum over L(n) of (m_r - 1)
      std::int64_t sum = 0;
      for (const auto& [w, c] : index) sum += c.right - 1;
      CHECK(sum == t.s(n));
      if (n <= 3) {
        for (const auto& [w, c] : index) CHECK(extension_counts(p, w) == c);
      }
    }
  }
}

TEST_CASE("bispecial words") {
  const Polygon square = catalog("square");
  const auto b1 = bispecial_words(square, 1);
  REQUIRE(b1.size() == 4);
  for (const auto& b : b1) CHECK(b.counts == ExtensionCounts{3, 3, 7});
  const auto b0 = bispecial_words(square, 0);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0].word.empty());
  CHECK(b0[0].counts == ExtensionCounts{4, 4, 12});
}

TEST_CASE("difference identity") {
  const auto r = verify_difference_identity(catalog("square"), 1);
  CHECK(r.lhs == 8);
  CHECK(r.rhs == 8);
  CHECK(r.holds);
  for (const Polygon& p : test_polygons()) {
    const LanguageTable t = stored(p, 10);
    for (std::size_t n = 1; n + 2 <= 10; ++n) {
      const auto rep = verify_difference_identity(t, n);
      CHECK(rep.holds);
      CHECK(rep.lhs == rep.rhs);
    }
  }
  CHECK_THROWS(verify_difference_identity(catalog("square"), 0));
}

TEST_CASE("sampled words are enumerated words") {
  CHECK(sample_words(catalog("square"), 4, 0, 1).empty());
  for (const Polygon& p : test_polygons()) {
    const LanguageTable t = stored(p, 6);
    for (std::uint64_t seed : {1, 2}) {
      const auto sampled = sample_words(p, 6, 2000, seed);
      CHECK(!sampled.empty());
      for (const Word& w : sampled) {
        CHECK(std::binary_search(t.words[6].begin(), t.words[6].end(), w));
      }
    }
  }
  // small languages saturate
  const LanguageTable sq = stored(catalog("square"), 2);
  const auto s2 = sample_words(catalog("square"), 2, 5000, 9);
  CHECK(s2.size() == sq.p(2));
}
