#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "billiards/diagonals.hpp"
#include "billiards/lattice.hpp"

namespace py = pybind11;
using namespace billiards;

namespace {

using WordTuple = std::vector<int>;

Word to_word(const WordTuple& letters) {
  Word w;
  for (int l : letters) {
    if (l < 0 || l > 255) throw std::invalid_argument("letter out of range");
    w.push_back(l);
  }
  return w;
}

WordTuple from_word(const Word& w) {
  WordTuple out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[i]);
  return out;
}

std::vector<std::pair<std::string, std::string>> vertex_strings(const Polygon& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& v : p.vertices()) out.emplace_back(v.x.to_string(), v.y.to_string());
  return out;
}

Polygon from_strings(const std::vector<std::pair<std::string, std::string>>& vertices) {
  std::vector<Point2> pts;
  for (const auto& [x, y] : vertices) pts.push_back({QuadScalar::parse(x), QuadScalar::parse(y)});
  return Polygon::from_vertices(std::move(pts));
}

LanguageTable language(const Polygon& p, std::size_t n_max, bool store, unsigned threads) {
  EnumerationOptions opts;
  opts.mode = store ? EnumerationMode::kStore : EnumerationMode::kCount;
  opts.threads = threads;
  py::gil_scoped_release release;
  return enumerate_language(p, n_max, opts);
}

py::dict lemma_row(const LemmaCheck& c) {
  py::dict d;
  d["word"] = from_word(c.word.word);
  d["m_l"] = c.word.counts.left;
  d["m_r"] = c.word.counts.right;
  d["m_b"] = c.word.counts.both;
  d["gd"] = c.gd;
  d["expected"] = c.expected;
  d["holds"] = c.holds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact complexity and generalized diagonals of convex polygonal billiards";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PolygonError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Polygon>(m, "Polygon")
      .def_property_readonly("size", &Polygon::size)
      .def_property_readonly("field", &Polygon::field)
      .def_property_readonly("vertices", &vertex_strings)
      .def("__len__", &Polygon::size)
      .def("__repr__", [](const Polygon& p) {
        std::string s = "Polygon([";
        for (const auto& [x, y] : vertex_strings(p)) s += "(" + x + ", " + y + "), ";
        return s.substr(0, s.size() - 2) + "])";
      });

  m.def("catalog", [](const std::string& name) { return catalog(name); }, py::arg("name"));
  m.def("catalog_names", &catalog_names);
  m.def("random_quadrilateral", &random_convex_quadrilateral, py::arg("seed"));
  m.def("polygon", &from_strings, py::arg("vertices"),
        "Polygon from (x, y) scalar strings such as ('1/2', '1/2*sqrt(3)').");
  m.def("load_polygon", &load_polygon_file, py::arg("path"));
  m.def("validate", [](const std::vector<std::pair<std::string, std::string>>& vertices) {
    std::vector<Point2> pts;
    for (const auto& [x, y] : vertices) pts.push_back({QuadScalar::parse(x), QuadScalar::parse(y)});
    const ValidationReport r = validate(pts);
    return std::string(to_string(r.code));
  }, py::arg("vertices"), "Name of the first violated invariant, or 'ok'.");

  m.def("complexity", [](const Polygon& p, std::size_t n_max, unsigned threads) {
    return language(p, n_max, false, threads).complexity;
  }, py::arg("polygon"), py::arg("n_max"), py::arg("threads") = 1, "[p(0), ..., p(n_max)] with p(0) = 0.");
  m.def("words", [](const Polygon& p, std::size_t n) {
    const LanguageTable table = language(p, n, true, 1);
    std::vector<WordTuple> out;
    for (const Word& w : table.words[n]) out.push_back(from_word(w));
    return out;
  }, py::arg("polygon"), py::arg("n"));
  m.def("word_feasible", [](const Polygon& p, const WordTuple& w) { return word_feasible(p, to_word(w)); },
        py::arg("polygon"), py::arg("word"));
  m.def("extension_counts", [](const Polygon& p, const WordTuple& w) {
    const ExtensionCounts c = extension_counts(p, to_word(w));
    return std::make_tuple(c.left, c.right, c.both);
  }, py::arg("polygon"), py::arg("word"), "(m_l, m_r, m_b)");
  m.def("bispecial_words", [](const Polygon& p, std::size_t n) {
    std::vector<std::tuple<WordTuple, int, int, int>> out;
    for (const auto& b : bispecial_words(p, n)) {
      out.emplace_back(from_word(b.word), b.counts.left, b.counts.right, b.counts.both);
    }
    return out;
  }, py::arg("polygon"), py::arg("n"));
  m.def("sample_words", [](const Polygon& p, std::size_t n, std::uint64_t trials, std::uint64_t seed) {
    std::vector<WordTuple> out;
    for (const Word& w : sample_words(p, n, trials, seed)) out.push_back(from_word(w));
    return out;
  }, py::arg("polygon"), py::arg("n"), py::arg("trials"), py::arg("seed") = 1);

  m.def("diagonal_counts", [](const Polygon& p, std::size_t max_links, unsigned threads) {
    DiagonalOptions opts;
    opts.threads = threads;
    DiagonalTable t;
    {
      py::gil_scoped_release release;
      t = enumerate_diagonals(p, max_links, opts);
    }
    std::vector<std::uint64_t> cumulative;
    for (std::size_t j = 0; j <= max_links; ++j) cumulative.push_back(t.cumulative(j));
    return cumulative;
  }, py::arg("polygon"), py::arg("max_links"), py::arg("threads") = 1, "[N_c(0), ..., N_c(max_links)]");
  m.def("diagonals", [](const Polygon& p, std::size_t max_links) {
    DiagonalOptions opts;
    opts.keep_list = true;
    std::vector<std::tuple<int, WordTuple, int, std::string, std::string>> out;
    const DiagonalTable table = enumerate_diagonals(p, max_links, opts);
    for (const auto& d : table.diagonals) {
      out.emplace_back(d.start, from_word(d.code), d.end_vertex, d.end.x.to_string(), d.end.y.to_string());
    }
    return out;
  }, py::arg("polygon"), py::arg("max_links"), "(start, code, end_vertex, end_x, end_y) tuples");
  m.def("gd", [](const Polygon& p, const WordTuple& w) { return gd(p, to_word(w)); },
        py::arg("polygon"), py::arg("word"));
  m.def("index_of", [](const Polygon& p, const WordTuple& w) {
    const WordIndex i = index_of(p, to_word(w));
    return std::make_tuple(i.left_excess, i.right_excess, i.diagonals);
  }, py::arg("polygon"), py::arg("word"), "(I_l, I_r, gd)");

  m.def("verify_complexity_sum", [](const Polygon& p, std::size_t n_max) {
    ComplexitySumReport r;
    {
      py::gil_scoped_release release;
      r = verify_complexity_sum(p, n_max);
    }
    std::vector<std::tuple<std::size_t, std::uint64_t, std::uint64_t>> rows;
    for (const auto& row : r.rows) rows.emplace_back(row.n, row.complexity, row.diagonal_sum);
    return std::make_pair(r.holds, rows);
  }, py::arg("polygon"), py::arg("n_max"), "(holds, [(n, p(n), sum_{j<n} N_c(j))])");
  m.def("verify_difference_identity", [](const Polygon& p, std::size_t n) {
    const auto r = verify_difference_identity(p, n);
    return std::make_tuple(r.holds, r.lhs, r.rhs);
  }, py::arg("polygon"), py::arg("n"), "(holds, s(n+1) - s(n), bispecial sum)");
  m.def("verify_geometric_lemma", [](const Polygon& p, std::size_t n) {
    const auto r = verify_geometric_lemma(p, n);
    py::list rows;
    for (const auto& c : r.checks) rows.append(lemma_row(c));
    return std::make_pair(r.holds, rows);
  }, py::arg("polygon"), py::arg("n"));

  // lattice side
  m.def("coprime_count_simplex", [](std::int64_t bound, bool include_axes) {
    return lattice::coprime_count(lattice::Simplex{bound, include_axes});
  }, py::arg("bound"), py::arg("include_axes") = true);
  m.def("isosceles_region_count", py::overload_cast<std::int64_t>(&lattice::isosceles_region_count), py::arg("n"));
  m.def("square_closed_count", py::overload_cast<std::int64_t>(&lattice::square_closed_count), py::arg("n"));
  m.def("equilateral_closed_count", py::overload_cast<std::int64_t>(&lattice::equilateral_closed_count), py::arg("n"));
  m.def("isosceles_link_length", &lattice::isosceles_link_length, py::arg("i"), py::arg("j"));
  m.def("isosceles_m0", [](std::int64_t i, std::int64_t j) {
    const auto r = lattice::isosceles_m0(i, j);
    return std::make_pair(r.m0, r.ok());
  }, py::arg("i"), py::arg("j"), "(m0, bounds hold)");
  m.def("limit_constant", [](const std::string& c, int digits) {
    return lattice::limit_constant(lattice::parse_tiling_case(c), digits);
  }, py::arg("case"), py::arg("digits") = 64);
  m.def("estimate_limit", [](const std::string& c, std::int64_t n, int digits) {
    const auto r = lattice::estimate_limit(lattice::parse_tiling_case(c), n, digits);
    py::dict d;
    d["n"] = r.n;
    d["count"] = r.count;
    d["prediction"] = r.prediction;
    d["ratio"] = r.ratio;
    d["rel_dev"] = r.rel_dev;
    return d;
  }, py::arg("case"), py::arg("n"), py::arg("digits") = 64);
}
