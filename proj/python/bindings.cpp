#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chromhom/csf.hpp"
#include "chromhom/errors.hpp"
#include "chromhom/homology.hpp"
#include "chromhom/star_formulas.hpp"
#include "chromhom/symmetric_group.hpp"
#include "chromhom/tableau.hpp"

namespace py = pybind11;
using namespace chromhom;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

// Partitions come in as "3,2,2", "3 2^2" or a sequence of ints.
Partition as_partition(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_partition(obj.cast<std::string>());
  return Partition::from_unsorted(obj.cast<std::vector<int>>());
}

py::tuple as_tuple(const Partition& p) { return py::tuple(py::cast(p.parts())); }

py::dict table_dict(const MultiplicityTable& t) {
  py::dict d;
  for (const auto& [lambda, m] : t.entries()) d[as_tuple(lambda)] = to_py(m);
  return d;
}

Graph make_graph(std::optional<int> star_n, std::optional<int> n, std::optional<std::vector<Edge>> edges) {
  if (star_n) {
    if (n || edges) throw std::invalid_argument("give either star=N or n and edges");
    return star(*star_n);
  }
  if (!n) throw std::invalid_argument("a graph needs star=N or n=... with edges=[...]");
  return Graph(*n, edges.value_or(std::vector<Edge>{}));
}

}  // namespace

PYBIND11_MODULE(_chromhom, m) {
  m.doc() = "Tableaux combinatorics and degree-0 chromatic symmetric homology";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("partitions_of", [](int n) {
    py::list out;
    for (const auto& p : partitions_of(n)) out.append(as_tuple(p));
    return out;
  });
  m.def("f_syt", [](const py::object& shape) { return to_py(f_syt(as_partition(shape))); }, py::arg("shape"));
  m.def("hook_lengths", [](const py::object& shape) { return hook_lengths(as_partition(shape)).rows(); },
        py::arg("shape"));
  m.def("kostka", [](const py::object& shape, const py::object& content) {
    return to_py(kostka(as_partition(shape), as_partition(content)));
  }, py::arg("shape"), py::arg("content"));
  m.def("enumerate_syt", [](const py::object& shape) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& t : enumerate_syt(as_partition(shape))) out.push_back(t.rows());
    return out;
  }, py::arg("shape"));
  m.def("enumerate_ssyt", [](const py::object& shape, const py::object& content) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& t : enumerate_ssyt(as_partition(shape), as_partition(content))) out.push_back(t.rows());
    return out;
  }, py::arg("shape"), py::arg("content"));
  m.def("character", [](const py::object& lambda, const py::object& cycle_type) {
    return to_py(character(as_partition(lambda), ClassLabel{as_partition(cycle_type)}));
  }, py::arg("shape"), py::arg("cycle_type"));

  m.def("star_edges", [](int n) { return star(n).edges(); }, py::arg("n"));

  m.def("chromatic_symmetric_function",
        [](std::optional<int> star_n, std::optional<int> n, std::optional<std::vector<Edge>> edges,
           const std::string& basis) {
          CsfExpansion e = chromatic_symmetric_function(make_graph(star_n, n, edges));
          if (basis == "schur") e = csf_to_schur(e);
          else if (basis != "monomial") throw std::invalid_argument("basis must be 'monomial' or 'schur'");
          py::dict d;
          for (const auto& [p, c] : e.coefficients) d[as_tuple(p)] = to_py(c);
          return d;
        },
        py::kw_only(), py::arg("star") = py::none(), py::arg("n") = py::none(), py::arg("edges") = py::none(),
        py::arg("basis") = "monomial");

  m.def("homology",
        [](std::optional<int> star_n, std::optional<int> n, std::optional<std::vector<Edge>> edges, int i,
           const std::string& rank_mode, bool allow_large, std::uint64_t seed) {
          HomologyOptions o;
          o.rank_mode = parse_rank_mode(rank_mode);
          o.allow_large = allow_large;
          o.seed = seed;
          const Graph g = make_graph(star_n, n, edges);
          HomologyResult h;
          {
            py::gil_scoped_release release;
            h = homology_multiplicities(g, i, o);
          }
          return table_dict(h.table);
        },
        py::kw_only(), py::arg("star") = py::none(), py::arg("n") = py::none(), py::arg("edges") = py::none(),
        py::arg("i") = 1, py::arg("rank_mode") = "auto", py::arg("allow_large") = false, py::arg("seed") = 1);

  m.def("mult_general", [](int n, int ell, int k) { return to_py(mult_general(StarShape(n, ell, k))); },
        py::arg("n"), py::arg("ell"), py::arg("k"));
  m.def("mult_hook_case", [](int n, int ell) { return to_py(mult_hook_case(n, ell)); }, py::arg("n"),
        py::arg("ell"));
  m.def("mult_two_column", [](int n, int k) { return to_py(mult_two_column(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("predict_h10_star", [](int n) { return table_dict(predict_h10_star(n)); }, py::arg("n"));
  m.def("check_conjecture", [](int n, const std::string& rank_mode) {
    HomologyOptions o;
    o.rank_mode = parse_rank_mode(rank_mode);
    ConjectureReport r;
    {
      py::gil_scoped_release release;
      r = check_conjecture(n, o);
    }
    py::list violations;
    for (const auto& v : r.violations) violations.append(py::make_tuple(v.index, as_tuple(v.lambda), to_py(v.multiplicity)));
    return violations;
  }, py::arg("n"), py::arg("rank_mode") = "auto");
}
