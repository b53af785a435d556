#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arrango/checks.hpp"
#include "arrango/classify.hpp"
#include "arrango/plot.hpp"

namespace py = pybind11;
using namespace arrango;

namespace {

std::vector<std::vector<std::string>> normals_as_text(const Arrangement &a) {
  std::vector<std::vector<std::string>> out;
  for (const auto &v : a.normals()) {
    std::vector<std::string> row;
    for (const auto &x : v) row.push_back(x.to_string());
    out.push_back(std::move(row));
  }
  return out;
}

py::dict classification_dict(const Classification &c) {
  py::dict d;
  d["dim"] = c.dim;
  d["rank"] = c.rank;
  d["size"] = c.size;
  d["real"] = c.real;
  d["irreducible"] = c.irreducible;
  d["simplicial"] = c.simplicial;
  d["simplicial_test"] = c.simplicial_test;
  d["supersolvable"] = c.supersolvable;
  d["crystallographic"] = c.crystallographic ? py::cast(*c.crystallographic) : py::none();
  d["identified"] = c.identified ? py::cast(*c.identified) : py::none();
  d["notes"] = c.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_arrango, m) {
  m.doc() = "Exact computations with hyperplane arrangements";

  py::register_exception<ArrangementError>(m, "ArrangementError");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Arrangement>(m, "Arrangement")
      .def_property_readonly("dim", &Arrangement::dim)
      .def_property_readonly("rank", &Arrangement::rank)
      .def_property_readonly("field", [](const Arrangement &a) { return a.field().tag(); })
      .def_property_readonly("is_real", &Arrangement::is_real)
      .def_property_readonly("is_essential", &Arrangement::is_essential)
      .def("normals", &normals_as_text, "Normals as exact scalar literals")
      .def("to_text", &write_arrangement, "Canonical text in the file format")
      .def("__len__", &Arrangement::size)
      .def("__eq__", [](const Arrangement &a, const Arrangement &b) { return a == b; })
      .def("__repr__", [](const Arrangement &a) {
        return "<Arrangement dim=" + std::to_string(a.dim()) + " size=" + std::to_string(a.size()) + " field=" +
               a.field().tag() + ">";
      });

  m.def("by_name", &gen::by_name, py::arg("name"), "Catalog arrangement, e.g. 'A(9,1)', 'reflC:4', 'Alk:4:3'");
  m.def("catalog_names", &gen::catalog_names);
  m.def("parse", [](const std::string &text) { return parse_arrangement(text); }, py::arg("text"));
  m.def("product", &product);

  m.def("char_poly", [](const Arrangement &a) { return char_poly(a).coefficients; },
        "Coefficients of chi(t), constant term first");
  m.def("s_value", py::overload_cast<const Arrangement &>(&s_value));
  m.def("rank2_multiset", [](const Arrangement &a) { return rank2_multiset(IntersectionLattice(a)); });
  m.def("supersolvable",
        [](const Arrangement &a) -> py::object {
          auto c = is_supersolvable(a);
          if (!c) return py::none();
          return py::cast(c->exponents);
        },
        "Exponents when supersolvable, else None");
  m.def("lattice_isomorphism",
        [](const Arrangement &a, const Arrangement &b) {
          return lattice_isomorphism(IntersectionLattice(a), IntersectionLattice(b));
        },
        "Hyperplane bijection inducing a lattice isomorphism, or None");

  m.def("chamber_count", [](const Arrangement &a) { return ChamberComplex::of(a).size(); });
  m.def("is_simplicial", [](const Arrangement &a) { return is_simplicial_geometric(ChamberComplex::of(a)); },
        "Every chamber is a simplicial cone (real arrangements)");
  m.def("coxeter_graphs",
        [](const Arrangement &a) {
          ChamberComplex cc = ChamberComplex::of(a);
          std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> out;
          for (std::size_t k = 0; k < cc.size(); ++k) out.push_back(coxeter_graph(cc, canonical_frame(cc, k)).edges);
          return out;
        },
        "Per chamber: {(i, j): m} over pairs of walls with m >= 3");

  m.def("classify", [](const Arrangement &a) { return classification_dict(classify(a)); });
  m.def("plot_svg", &plot_svg);

  m.def("check_suites", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &s : check_suites()) out.emplace_back(s.id, s.title);
    return out;
  });
  m.def("run_check",
        [](const std::string &id) {
          CheckResult r = run_check(id);
          py::dict d;
          d["id"] = r.id;
          d["passed"] = r.passed;
          d["details"] = r.details;
          return d;
        },
        py::arg("id"));

}
