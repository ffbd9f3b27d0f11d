#pragma once

// Generalized diagonals: oriented billiard segments from a vertex to a vertex
// with no vertex in between, found by exact visibility through unfoldings.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "billiards/language.hpp"

namespace billiards {

struct GeneralizedDiagonal {
  int start = 0;       // vertex of the table
  Word code;           // edges crossed strictly between the endpoints
  int end_vertex = 0;  // table vertex whose unfolded image is hit
  Point2 end;          // that image, in table coordinates of the start copy

  std::size_t links() const { return code.size() + 1; }
};

struct DiagonalOptions {
  bool keep_list = false;
  std::uint64_t cap = default_word_cap();
  unsigned threads = 1;
};

/// Counts by number of links. N_c(0) is the number of vertices: the table's
/// sides are not diagonals, and the vertices stand in for them.
struct DiagonalTable {
  std::size_t vertex_count = 0;
  std::size_t max_links = 0;
  std::vector<std::uint64_t> exact_links;  // index = links; [0] unused
  std::unordered_map<Word, std::uint64_t, WordHash> by_code;
  std::vector<GeneralizedDiagonal> diagonals;  // only with keep_list

  /// N_c(j): vertex count plus diagonals with at most j links.
  std::uint64_t cumulative(std::size_t j) const;
  /// gd(v) from the table; v must satisfy |v| + 1 <= max_links.
  std::uint64_t gd(const Word& code) const;
};

/// Diagonals with 1..max_links links, ordered by start vertex, then code,
/// then end vertex.
DiagonalTable enumerate_diagonals(const Polygon& polygon, std::size_t max_links,
                                  const DiagonalOptions& options = {});

/// Diagonals whose code is exactly `code`, by direct visibility through the
/// corridor of `code` from every vertex.
std::vector<GeneralizedDiagonal> diagonals_with_code(const Polygon& polygon, const Word& code);
std::uint64_t gd(const Polygon& polygon, const Word& code);

struct WordIndex {
  int left_excess = 0;   // I_l = m_l - 1
  int right_excess = 0;  // I_r = m_r - 1
  std::uint64_t diagonals = 0;
};

/// (I_l, I_r, gd) of a bispecial word; throws std::invalid_argument otherwise.
WordIndex index_of(const Polygon& polygon, const Word& word);

struct LemmaCheck {
  BispecialWord word;
  std::uint64_t gd = 0;
  std::int64_t expected = 0;  // I_l + I_r + gd + 1 (+ 2 for the empty word)
  bool holds = false;
};

struct GeometricLemmaReport {
  std::size_t n = 0;
  std::vector<LemmaCheck> checks;
  bool holds = true;
};

/// m_b(v) against I_l + I_r + gd + 1 for every bispecial v of length n >= 1,
/// with extension counts from the language and gd from the diagonal table.
///
/// The empty word is special: its cell is the whole phase space, one disc per
/// side rather than a single disc. Each side's disc is cut by the r - 2
/// vertices off that side, so m_b = r(r - 1) = I_l + I_r + gd + 2 with
/// gd = r(r - 3) diagonals that cross nothing.
GeometricLemmaReport verify_geometric_lemma(const LanguageTable& language,
                                            const DiagonalTable& diagonals, std::size_t n);
GeometricLemmaReport verify_geometric_lemma(const Polygon& polygon, std::size_t n);

struct ComplexitySumRow {
  std::size_t n = 0;
  std::uint64_t complexity = 0;   // p(n) from the language
  std::uint64_t diagonal_sum = 0; // sum_{j<n} N_c(j) from the diagonals
  bool holds = false;
};

struct ComplexitySumReport {
  std::vector<ComplexitySumRow> rows;
  bool holds = true;
};

/// p(n) = sum_{j<n} N_c(j) for 1 <= n <= n_max.
ComplexitySumReport verify_complexity_sum(const LanguageTable& language, const DiagonalTable& diagonals);
ComplexitySumReport verify_complexity_sum(const Polygon& polygon, std::size_t n_max);

}  // namespace billiards
