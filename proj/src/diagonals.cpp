#include "billiards/diagonals.hpp"

#include <algorithm>
#include <future>

namespace billiards {

std::uint64_t DiagonalTable::cumulative(std::size_t j) const {
  if (j > max_links) {
    throw std::out_of_range("N_c(" + std::to_string(j) + ") beyond max_links " +
                            std::to_string(max_links));
  }
  std::uint64_t total = vertex_count;
  for (std::size_t l = 1; l <= j; ++l) total += exact_links[l];
  return total;
}

std::uint64_t DiagonalTable::gd(const Word& code) const {
  if (code.size() + 1 > max_links) {
    throw std::out_of_range("gd of a word of length " + std::to_string(code.size()) +
                            " needs max_links >= " + std::to_string(code.size() + 1));
  }
  const auto it = by_code.find(code);
  return it == by_code.end() ? 0 : it->second;
}

namespace {

bool adjacent(std::size_t i, std::size_t j, std::size_t r) {
  return (i + 1) % r == j || (j + 1) % r == i;
}

// All diagonals leaving one vertex, by depth-first search over corridors.
class DiagonalWalker {
 public:
  DiagonalWalker(const Polygon& polygon, int start, std::size_t max_links,
                 const DiagonalOptions& options)
      : polygon_(polygon), start_(start), max_links_(max_links), options_(options),
        exact_(max_links + 1, 0) {}

  void run() {
    const std::size_t r = polygon_.size();
    const UnfoldedCopy base = UnfoldedCopy::of(polygon_, AffineIsometry::identity());
    for (std::size_t t = 0; t < r; ++t) {
      if (t != static_cast<std::size_t>(start_) && !adjacent(start_, t, r)) emit(base, t);
    }
    if (max_links_ >= 2) {
      descend(base, DirectionCone(polygon_.vertex(start_)), -1);
    }
  }

  std::vector<std::uint64_t>& exact() { return exact_; }
  std::unordered_map<Word, std::uint64_t, WordHash>& by_code() { return by_code_; }
  std::vector<GeneralizedDiagonal>& list() { return list_; }

 private:
  void emit(const UnfoldedCopy& copy, std::size_t target) {
    ++exact_[code_.size() + 1];
    ++by_code_[code_];
    if (options_.keep_list) {
      list_.push_back({start_, code_, static_cast<int>(target), copy.vertices[target]});
    }
  }

  // `cone` threads the gates of code_; `copy` is the table copy beyond them.
  void descend(const UnfoldedCopy& copy, const DirectionCone& cone, int last) {
    const int r = static_cast<int>(polygon_.size());
    for (int b = 0; b < r; ++b) {
      if (b == last) continue;
      DirectionCone next = cone;
      if (!next.add_gate(copy.exit_gate(b))) continue;
      if (++visited_ > options_.cap) {
        throw ResourceLimitError("diagonal enumeration exceeded the cap of " +
                                 std::to_string(options_.cap) + " corridors");
      }
      code_.push_back(b);
      const UnfoldedCopy beyond = copy.across(polygon_, b);
      for (int t = 0; t < r; ++t) {
        if (next.contains(beyond.vertices[t])) emit(beyond, t);
      }
      if (code_.size() + 2 <= max_links_) descend(beyond, next, b);
      code_.pop_back();
    }
  }

  const Polygon& polygon_;
  int start_;
  std::size_t max_links_;
  DiagonalOptions options_;
  std::vector<std::uint64_t> exact_;
  std::unordered_map<Word, std::uint64_t, WordHash> by_code_;
  std::vector<GeneralizedDiagonal> list_;
  Word code_;
  std::uint64_t visited_ = 0;
};

}  // namespace

DiagonalTable enumerate_diagonals(const Polygon& polygon, std::size_t max_links,
                                  const DiagonalOptions& options) {
  if (max_links < 1) throw std::invalid_argument("max_links must be >= 1");
  const int r = static_cast<int>(polygon.size());
  const unsigned threads = std::clamp<unsigned>(options.threads, 1, static_cast<unsigned>(r));

  std::vector<std::future<std::vector<DiagonalWalker>>> jobs;
  for (unsigned t = 0; t < threads; ++t) {
    jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, [&, t] {
      std::vector<DiagonalWalker> walkers;
      for (int start = static_cast<int>(t); start < r; start += static_cast<int>(threads)) {
        walkers.emplace_back(polygon, start, max_links, options);
        walkers.back().run();
      }
      return walkers;
    }));
  }
  std::vector<std::vector<DiagonalWalker>> done;
  for (auto& job : jobs) done.push_back(job.get());

  DiagonalTable table;
  table.vertex_count = polygon.size();
  table.max_links = max_links;
  table.exact_links.assign(max_links + 1, 0);
  std::uint64_t total = 0;
  for (int start = 0; start < r; ++start) {
    DiagonalWalker& w = done[start % threads][start / threads];
    for (std::size_t l = 1; l <= max_links; ++l) {
      table.exact_links[l] += w.exact()[l];
      total += w.exact()[l];
    }
    for (const auto& [code, count] : w.by_code()) table.by_code[code] += count;
    auto& list = w.list();
    table.diagonals.insert(table.diagonals.end(), std::make_move_iterator(list.begin()),
                           std::make_move_iterator(list.end()));
  }
  if (total > options.cap) {
    throw ResourceLimitError("diagonal enumeration exceeded the cap of " +
                             std::to_string(options.cap));
  }
  return table;
}

std::vector<GeneralizedDiagonal> diagonals_with_code(const Polygon& polygon, const Word& code) {
  const std::size_t r = polygon.size();
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (static_cast<std::size_t>(code[i]) >= r) {
      throw std::invalid_argument("letter " + std::to_string(code[i]) + " outside alphabet");
    }
    if (i > 0 && code[i] == code[i - 1]) return {};
  }
  std::vector<GeneralizedDiagonal> out;
  for (std::size_t s = 0; s < r; ++s) {
    UnfoldedCopy copy = UnfoldedCopy::of(polygon, AffineIsometry::identity());
    if (code.empty()) {
      for (std::size_t t = 0; t < r; ++t) {
        if (t != s && !adjacent(s, t, r)) {
          out.push_back({static_cast<int>(s), code, static_cast<int>(t), copy.vertices[t]});
        }
      }
      continue;
    }
    DirectionCone cone(polygon.vertex(s));
    bool open = true;
    for (std::size_t i = 0; i < code.size() && open; ++i) {
      open = cone.add_gate(copy.exit_gate(code[i]));
      copy = copy.across(polygon, code[i]);
    }
    if (!open) continue;
    for (std::size_t t = 0; t < r; ++t) {
      if (cone.contains(copy.vertices[t])) {
        out.push_back({static_cast<int>(s), code, static_cast<int>(t), copy.vertices[t]});
      }
    }
  }
  return out;
}

std::uint64_t gd(const Polygon& polygon, const Word& code) {
  return diagonals_with_code(polygon, code).size();
}

WordIndex index_of(const Polygon& polygon, const Word& word) {
  const ExtensionCounts c = extension_counts(polygon, word);
  if (c.left < 2 || c.right < 2) {
    throw std::invalid_argument("word '" + word.to_string() + "' is not bispecial");
  }
  return {c.left - 1, c.right - 1, gd(polygon, word)};
}

GeometricLemmaReport verify_geometric_lemma(const LanguageTable& language,
                                            const DiagonalTable& diagonals, std::size_t n) {
  GeometricLemmaReport report;
  report.n = n;
  for (auto& b : bispecial_words(language, n)) {
    LemmaCheck check;
    check.gd = diagonals.gd(b.word);
    check.expected = (b.counts.left - 1) + (b.counts.right - 1) +
                     static_cast<std::int64_t>(check.gd) + (n == 0 ? 2 : 1);
    check.holds = b.counts.both == check.expected;
    check.word = std::move(b);
    report.holds = report.holds && check.holds;
    report.checks.push_back(std::move(check));
  }
  return report;
}

GeometricLemmaReport verify_geometric_lemma(const Polygon& polygon, std::size_t n) {
  EnumerationOptions opts;
  opts.mode = EnumerationMode::kStore;
  const LanguageTable language = enumerate_language(polygon, n + 2, opts);
  const DiagonalTable diagonals = enumerate_diagonals(polygon, n + 1);
  return verify_geometric_lemma(language, diagonals, n);
}

ComplexitySumReport verify_complexity_sum(const LanguageTable& language, const DiagonalTable& diagonals) {
  ComplexitySumReport report;
  const std::size_t n_max = std::min(language.n_max, diagonals.max_links + 1);
  std::uint64_t sum = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    sum += diagonals.cumulative(n - 1);
    ComplexitySumRow row{n, language.p(n), sum, language.p(n) == sum};
    report.holds = report.holds && row.holds;
    report.rows.push_back(row);
  }
  return report;
}

ComplexitySumReport verify_complexity_sum(const Polygon& polygon, std::size_t n_max) {
  const LanguageTable language = enumerate_language(polygon, n_max);
  const DiagonalTable diagonals = enumerate_diagonals(polygon, std::max<std::size_t>(n_max - 1, 1));
  return verify_complexity_sum(language, diagonals);
}

}  // namespace billiards
