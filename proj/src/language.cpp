#include "billiards/language.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <sstream>

namespace billiards {

Word::Word(std::initializer_list<int> letters) {
  for (int l : letters) push_back(l);
}

Word Word::parse(std::string_view text) {
  Word w;
  if (text.empty()) return w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (token.empty()) throw std::invalid_argument("empty letter in word '" + std::string(text) + "'");
    int value = 0;
    for (char ch : token) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument("bad letter in word '" + std::string(text) + "'");
      }
      value = value * 10 + (ch - '0');
      if (value > 255) throw std::invalid_argument("letter out of range");
    }
    w.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters_.begin(), w.letters_.end());
  return w;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return from_letters(letters_.substr(pos, len));
}

Word Word::prepended(int letter) const {
  Word w;
  w.letters_.reserve(size() + 1);
  w.push_back(letter);
  w.letters_ += letters_;
  return w;
}

Word Word::appended(int letter) const {
  Word w = *this;
  w.push_back(letter);
  return w;
}

std::string Word::to_string(char separator) const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += separator;
    out += std::to_string((*this)[i]);
  }
  return out;
}

std::uint64_t default_word_cap() {
  if (const char* env = std::getenv("BILLIARD_MAX_WORDS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 50'000'000;
}

UnfoldedCopy UnfoldedCopy::of(const Polygon& polygon, AffineIsometry frame) {
  UnfoldedCopy copy{std::move(frame), {}, +1};
  copy.vertices.reserve(polygon.size());
  for (const auto& v : polygon.vertices()) copy.vertices.push_back(copy.frame.apply(v));
  copy.orientation = copy.frame.determinant_sign();
  return copy;
}

UnfoldedCopy UnfoldedCopy::across(const Polygon& polygon, int edge) const {
  return of(polygon, frame.compose(polygon.edge_reflection(edge)));
}

Gate UnfoldedCopy::exit_gate(int edge) const {
  const std::size_t r = vertices.size();
  const Point2& a = vertices[edge];
  const Point2& b = vertices[(edge + 1) % r];
  return orientation > 0 ? Gate{b, a} : Gate{a, b};
}

Gate UnfoldedCopy::entry_gate(int edge) const {
  Gate g = exit_gate(edge);
  std::swap(g.left, g.right);
  return g;
}

namespace {

void check_letter(const Polygon& polygon, int letter) {
  if (letter < 0 || static_cast<std::size_t>(letter) >= polygon.size()) {
    throw std::invalid_argument("letter " + std::to_string(letter) + " outside alphabet of size " +
                                std::to_string(polygon.size()));
  }
}

}  // namespace

Corridor Corridor::start(const Polygon& polygon, int edge) {
  check_letter(polygon, edge);
  UnfoldedCopy base = UnfoldedCopy::of(polygon, AffineIsometry::identity());
  Gate entry = base.entry_gate(edge);
  Word w;
  w.push_back(edge);
  Window window(entry);
  return Corridor(std::move(w), std::move(window), std::move(base), {std::move(entry)});
}

std::optional<Corridor> extend(const Polygon& polygon, const Corridor& corridor, int next_edge) {
  check_letter(polygon, next_edge);
  if (!corridor.word().empty() && corridor.word().back() == next_edge) {
    throw std::invalid_argument("edge " + std::to_string(next_edge) + " repeats the last letter");
  }
  Gate gate = corridor.copy().exit_gate(next_edge);
  Window window = corridor.window();
  if (!window.add_gate(gate)) return std::nullopt;
  std::vector<Gate> gates = corridor.gates();
  gates.push_back(std::move(gate));
  return Corridor(corridor.word().appended(next_edge), std::move(window),
                  corridor.copy().across(polygon, next_edge), std::move(gates));
}

bool word_feasible(const Polygon& polygon, const Word& word) {
  for (std::size_t i = 0; i < word.size(); ++i) check_letter(polygon, word[i]);
  if (word.empty()) return true;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] == word[i - 1]) return false;
  }
  std::optional<Corridor> c = Corridor::start(polygon, word[0]);
  for (std::size_t i = 1; i < word.size() && c; ++i) c = extend(polygon, *c, word[i]);
  return c.has_value();
}

std::int64_t LanguageTable::s(std::size_t n) const {
  if (n < 1 || n >= n_max) {
    throw std::out_of_range("s(" + std::to_string(n) + ") needs 1 <= n < " + std::to_string(n_max));
  }
  return static_cast<std::int64_t>(complexity[n + 1]) - static_cast<std::int64_t>(complexity[n]);
}

namespace {

// Depth-first walk over feasible words starting with a fixed set of letters.
class LanguageWalker {
 public:
  LanguageWalker(const Polygon& polygon, std::size_t n_max, const EnumerationOptions& options)
      : polygon_(polygon), n_max_(n_max), options_(options), counts_(n_max + 1, 0) {
    if (options_.mode == EnumerationMode::kStore) words_.resize(n_max + 1);
  }

  void walk_from(int first) {
    const UnfoldedCopy base = UnfoldedCopy::of(polygon_, AffineIsometry::identity());
    current_ = Word{first};
    record(1);
    if (n_max_ > 1) descend(base, Window(base.entry_gate(first)), first, 1);
  }

  std::vector<std::uint64_t>& counts() { return counts_; }
  std::vector<std::vector<Word>>& words() { return words_; }

 private:
  void record(std::size_t length) {
    ++counts_[length];
    if (++visited_ > options_.word_cap) {
      throw ResourceLimitError("language enumeration exceeded the cap of " +
                               std::to_string(options_.word_cap) + " words");
    }
    if (!words_.empty()) words_[length].push_back(current_);
  }

  void descend(const UnfoldedCopy& copy, const Window& window, int last, std::size_t length) {
    const int r = static_cast<int>(polygon_.size());
    for (int b = 0; b < r; ++b) {
      if (b == last) continue;
      Window next = window;
      if (!next.add_gate(copy.exit_gate(b))) continue;
      current_.push_back(b);
      record(length + 1);
      if (length + 1 < n_max_) descend(copy.across(polygon_, b), next, b, length + 1);
      current_.pop_back();
    }
  }

  const Polygon& polygon_;
  std::size_t n_max_;
  EnumerationOptions options_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::vector<Word>> words_;
  Word current_;
  std::uint64_t visited_ = 0;
};

}  // namespace

LanguageTable enumerate_language(const Polygon& polygon, std::size_t n_max,
                                 const EnumerationOptions& options) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const int r = static_cast<int>(polygon.size());
  const unsigned threads = std::clamp<unsigned>(options.threads, 1, static_cast<unsigned>(r));

  // Letters are dealt round-robin; results are merged back in letter order.
  std::vector<std::future<std::vector<LanguageWalker>>> jobs;
  for (unsigned t = 0; t < threads; ++t) {
    jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                              [&, t] {
                                std::vector<LanguageWalker> walkers;
                                EnumerationOptions per_letter = options;
                                for (int first = static_cast<int>(t); first < r;
                                     first += static_cast<int>(threads)) {
                                  walkers.emplace_back(polygon, n_max, per_letter);
                                  walkers.back().walk_from(first);
                                }
                                return walkers;
                              }));
  }
  std::vector<std::vector<LanguageWalker>> done;
  for (auto& job : jobs) done.push_back(job.get());

  LanguageTable table;
  table.alphabet_size = polygon.size();
  table.n_max = n_max;
  table.complexity.assign(n_max + 1, 0);
  if (options.mode == EnumerationMode::kStore) table.words.resize(n_max + 1);
  std::uint64_t total = 0;
  for (int first = 0; first < r; ++first) {
    LanguageWalker& w = done[first % threads][first / threads];
    for (std::size_t n = 0; n <= n_max; ++n) {
      table.complexity[n] += w.counts()[n];
      total += w.counts()[n];
      if (table.stored()) {
        auto& src = w.words()[n];
        table.words[n].insert(table.words[n].end(), std::make_move_iterator(src.begin()),
                              std::make_move_iterator(src.end()));
      }
    }
  }
  if (total > options.word_cap) {
    throw ResourceLimitError("language enumeration exceeded the cap of " +
                             std::to_string(options.word_cap) + " words");
  }
  return table;
}

ExtensionCounts extension_counts(const Polygon& polygon, const Word& word) {
  if (!word_feasible(polygon, word)) {
    throw std::invalid_argument("word " + word.to_string() + " is not in the language");
  }
  const int r = static_cast<int>(polygon.size());
  ExtensionCounts counts;
  for (int a = 0; a < r; ++a) {
    if (word_feasible(polygon, word.prepended(a))) ++counts.left;
    if (word_feasible(polygon, word.appended(a))) ++counts.right;
    for (int b = 0; b < r; ++b) {
      if (word_feasible(polygon, word.prepended(a).appended(b))) ++counts.both;
    }
  }
  return counts;
}

std::unordered_map<Word, ExtensionCounts, WordHash> extension_index(const LanguageTable& table,
                                                                    std::size_t n) {
  if (!table.stored()) throw std::invalid_argument("extension counts need a stored language table");
  if (n + 2 > table.n_max) {
    throw std::invalid_argument("extension counts of L(" + std::to_string(n) +
                                ") need the table up to n = " + std::to_string(n + 2));
  }
  std::unordered_map<Word, ExtensionCounts, WordHash> index;
  if (n == 0) {
    const int r = static_cast<int>(table.alphabet_size);
    index[Word{}] = {r, r, static_cast<int>(table.p(2))};
    return index;
  }
  index.reserve(table.words[n].size());
  for (const auto& w : table.words[n]) index[w];
  for (const auto& u : table.words[n + 1]) {
    ++index.at(u.subword(1, n)).left;
    ++index.at(u.subword(0, n)).right;
  }
  for (const auto& u : table.words[n + 2]) ++index.at(u.subword(1, n)).both;
  return index;
}

std::vector<BispecialWord> bispecial_words(const LanguageTable& table, std::size_t n) {
  const auto index = extension_index(table, n);
  std::vector<BispecialWord> out;
  if (n == 0) {
    out.push_back({Word{}, index.at(Word{})});
    return out;
  }
  for (const auto& w : table.words[n]) {
    const ExtensionCounts& c = index.at(w);
    if (c.left > 1 && c.right > 1) out.push_back({w, c});
  }
  return out;
}

std::vector<BispecialWord> bispecial_words(const Polygon& polygon, std::size_t n) {
  EnumerationOptions opts;
  opts.mode = EnumerationMode::kStore;
  return bispecial_words(enumerate_language(polygon, n + 2, opts), n);
}

DifferenceIdentityReport verify_difference_identity(const LanguageTable& table, std::size_t n) {
  if (n < 1) throw std::invalid_argument("the difference identity starts at n = 1");
  DifferenceIdentityReport report;
  report.n = n;
  report.lhs = table.s(n + 1) - table.s(n);
  auto bispecial = bispecial_words(table, n);
  for (const auto& b : bispecial) {
    report.rhs += b.counts.both - b.counts.left - b.counts.right + 1;
  }
  report.holds = report.lhs == report.rhs;
  if (!report.holds) report.witnesses = std::move(bispecial);
  return report;
}

DifferenceIdentityReport verify_difference_identity(const Polygon& polygon, std::size_t n) {
  EnumerationOptions opts;
  opts.mode = EnumerationMode::kStore;
  return verify_difference_identity(enumerate_language(polygon, n + 2, opts), n);
}

}  // namespace billiards
