#pragma once

// The coding language of billiard orbits: exact enumeration of L(n) by
// depth-first beam tracing through unfoldings, extension counts, bispecial
// words, and a trajectory-sampling oracle.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "billiards/polygon.hpp"
#include "billiards/window.hpp"

namespace billiards {

using Letter = std::uint8_t;

/// Sequence of edge labels. Ordered lexicographically by letters.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  static Word from_letters(std::string letters) { Word w; w.letters_ = std::move(letters); return w; }

  /// Parses comma separated letters ("0,2,1"); the empty string is the empty word.
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  int back() const { return static_cast<Letter>(letters_.back()); }

  void push_back(int letter) { letters_.push_back(static_cast<char>(letter)); }
  void pop_back() { letters_.pop_back(); }

  Word reversed() const;
  Word subword(std::size_t pos, std::size_t len) const;
  Word prepended(int letter) const;
  Word appended(int letter) const;

  /// Comma separated letters.
  std::string to_string(char separator = ',') const;
  const std::string& key() const { return letters_; }

  friend auto operator<=>(const Word& lhs, const Word& rhs) {
    return std::lexicographical_compare_three_way(
        lhs.letters_.begin(), lhs.letters_.end(), rhs.letters_.begin(), rhs.letters_.end(),
        [](char x, char y) { return static_cast<Letter>(x) <=> static_cast<Letter>(y); });
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::string>{}(w.key()); }
};

/// Thrown when an enumeration would exceed the configured word cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on stored/visited words; `BILLIARD_MAX_WORDS` overrides it.
std::uint64_t default_word_cap();

/// Unfolded copy of the table reached after crossing some edges.
struct UnfoldedCopy {
  AffineIsometry frame;          // table coordinates -> plane
  std::vector<Point2> vertices;  // frame applied to every table vertex
  int orientation = +1;          // determinant sign of frame

  static UnfoldedCopy of(const Polygon& polygon, AffineIsometry frame);
  /// The copy reflected across its own edge `edge`.
  UnfoldedCopy across(const Polygon& polygon, int edge) const;
  /// Edge `edge` of this copy as crossed by a line leaving the copy.
  Gate exit_gate(int edge) const;
  /// Edge `edge` of this copy as crossed by a line entering the copy.
  Gate entry_gate(int edge) const;
};

/// A word together with its unfolding and window: the current copy is the
/// one the trajectory travels through after crossing the last letter.
class Corridor {
 public:
  /// Corridor of the one-letter word `edge` (starting on that edge).
  static Corridor start(const Polygon& polygon, int edge);

  const Word& word() const { return word_; }
  const Window& window() const { return window_; }
  const UnfoldedCopy& copy() const { return copy_; }
  const std::vector<Gate>& gates() const { return gates_; }

 private:
  friend std::optional<Corridor> extend(const Polygon& polygon, const Corridor& corridor,
                                        int next_edge);
  Corridor(Word word, Window window, UnfoldedCopy copy, std::vector<Gate> gates)
      : word_(std::move(word)), window_(std::move(window)), copy_(std::move(copy)),
        gates_(std::move(gates)) {}

  Word word_;
  Window window_;
  UnfoldedCopy copy_;
  std::vector<Gate> gates_;
};

/// Appends `next_edge`; nullopt when no trajectory realises the longer word.
/// Throws std::invalid_argument when next_edge repeats the last letter or is
/// outside the alphabet.
std::optional<Corridor> extend(const Polygon& polygon, const Corridor& corridor, int next_edge);

/// True iff some billiard trajectory crosses the open edges of `word` in order.
bool word_feasible(const Polygon& polygon, const Word& word);

enum class EnumerationMode { kStore, kCount };

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::kCount;
  std::uint64_t word_cap = default_word_cap();
  unsigned threads = 1;
};

/// p(n) for 0 <= n <= n_max (p(0) := 0) and, in store mode, L(n) in
/// lexicographic order.
struct LanguageTable {
  std::size_t alphabet_size = 0;
  std::size_t n_max = 0;
  std::vector<std::uint64_t> complexity;  // index n
  std::vector<std::vector<Word>> words;   // index n; empty in count mode

  std::uint64_t p(std::size_t n) const { return complexity.at(n); }
  /// s(n) = p(n+1) - p(n) for 1 <= n < n_max.
  std::int64_t s(std::size_t n) const;
  bool stored() const { return !words.empty(); }
};

LanguageTable enumerate_language(const Polygon& polygon, std::size_t n_max,
                                 const EnumerationOptions& options = {});

struct ExtensionCounts {
  int left = 0;
  int right = 0;
  int both = 0;

  friend bool operator==(const ExtensionCounts&, const ExtensionCounts&) = default;
};

/// Counts for one word by direct feasibility tests. Throws
/// std::invalid_argument if `word` itself is infeasible.
ExtensionCounts extension_counts(const Polygon& polygon, const Word& word);

/// Counts for every word of L(n), from a stored table with n + 2 <= n_max.
std::unordered_map<Word, ExtensionCounts, WordHash> extension_index(const LanguageTable& table,
                                                                    std::size_t n);

struct BispecialWord {
  Word word;
  ExtensionCounts counts;
};

/// Bispecial words of L(n) in lexicographic order. For n = 0 this is the
/// empty word with m_l = m_r = r.
std::vector<BispecialWord> bispecial_words(const LanguageTable& table, std::size_t n);
std::vector<BispecialWord> bispecial_words(const Polygon& polygon, std::size_t n);

struct DifferenceIdentityReport {
  std::size_t n = 0;
  std::int64_t lhs = 0;  // s(n+1) - s(n)
  std::int64_t rhs = 0;  // sum over BL(n) of m_b - m_l - m_r + 1
  bool holds = false;
  std::vector<BispecialWord> witnesses;  // BL(n), reported on failure
};

/// Needs a stored table with n + 2 <= n_max; n >= 1.
DifferenceIdentityReport verify_difference_identity(const LanguageTable& table, std::size_t n);
DifferenceIdentityReport verify_difference_identity(const Polygon& polygon, std::size_t n);

/// Codes of length n of exact trajectories from random boundary points with
/// random rational directions. Always a subset of L(n).
std::set<Word> sample_words(const Polygon& polygon, std::size_t n, std::uint64_t trials,
                            std::uint64_t seed);

}  // namespace billiards
