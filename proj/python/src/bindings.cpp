#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "skewlat/cayley.hpp"
#include "skewlat/constructions.hpp"
#include "skewlat/errors.hpp"
#include "skewlat/green.hpp"
#include "skewlat/io.hpp"
#include "skewlat/library.hpp"
#include "skewlat/search.hpp"
#include "skewlat/term.hpp"
#include "skewlat/theorems.hpp"
#include "skewlat/varieties.hpp"
#include "skewlat/ybe.hpp"

namespace py = pybind11;
using namespace skewlat;

namespace {

  using Rows = std::vector<std::vector<element_type>>;

  Rows rows(std::span<element_type const> t, std::size_t n) {
    Rows out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i].assign(t.begin() + i * n, t.begin() + (i + 1) * n);
    }
    return out;
  }

  std::vector<std::string> violations(Rows const& meet, Rows const& join) {
    std::vector<std::string> out;
    auto const               res = validate(CayleyPair::from_rows(meet, join));
    for (auto const& v : res.violations()) {
      out.push_back(v.describe());
    }
    return out;
  }

  Formula resolve(std::string const& text) {
    auto const& lib = FormulaLibrary::bundled();
    return lib.contains(text) ? lib.formula(text) : parse_formula(text);
  }

  py::dict holds_dict(SkewLattice const& S, std::string const& text) {
    auto const r = holds(S, resolve(text));
    py::dict   d;
    d["holds"] = r.holds;
    py::dict assignment;
    for (auto [v, x] : r.counterexample) {
      assignment[py::str(std::string(1, v))] = x;
    }
    d["counterexample"] = assignment;
    if (!r.holds) {
      d["lhs"] = r.lhs;
      d["rhs"] = r.rhs;
    }
    return d;
  }

  std::map<std::string, bool> classify_dict(SkewLattice const& S) {
    auto const                  r = classify(S);
    std::map<std::string, bool> out;
    for (auto name : VarietyReport::flag_names()) {
      out.emplace(std::string(name), r[name].value);
    }
    return out;
  }

  py::object braid_dict(SkewLattice const& S, std::string const& kind) {
    auto const b = braid_check(build_map(S, map_kind_from_string(kind)));
    if (b.pass()) {
      return py::none();
    }
    py::dict d;
    d["triple"] = b.witness->triple;
    d["lhs"]    = b.witness->lhs;
    d["rhs"]    = b.witness->rhs;
    return d;
  }

  py::dict report_dict(SkewLattice const& S, std::string const& kind) {
    auto const r = solution_report(S, map_kind_from_string(kind));
    py::dict   d;
    d["map"]                 = std::string(to_string(r.kind));
    d["braid"]               = r.braid.pass();
    d["power_class"]         = std::string(r.power.name());
    d["involutive"]          = r.power.involutive;
    d["idempotent"]          = r.power.idempotent;
    d["cubic"]               = r.power.cubic;
    d["left_nondegenerate"]  = r.degeneracy.left;
    d["right_nondegenerate"] = r.degeneracy.right;
    return d;
  }

  py::dict enumerate_dict(std::size_t n, std::vector<std::string> satisfy,
                          std::vector<std::string> falsify, std::optional<std::size_t> limit,
                          unsigned jobs) {
    SearchSpec spec{n, std::move(satisfy), std::move(falsify)};
    if (limit) {
      spec.limit = *limit;
    }
    Budget b;
    b.jobs = jobs;
    EnumerationResult r;
    {
      py::gil_scoped_release release;
      r = enumerate(spec, b);
    }
    py::dict d;
    d["count"]     = r.count;
    d["census"]    = r.census;
    d["exhausted"] = r.exhausted;
    d["nodes"]     = r.nodes;
    d["witnesses"] = r.witnesses;
    return d;
  }

  std::vector<py::dict> theorems_list(std::size_t max_n, unsigned jobs) {
    std::vector<TheoremRow> rows;
    {
      py::gil_scoped_release release;
      rows = run_theorems(max_n, jobs);
    }
    std::vector<py::dict> out;
    for (auto const& r : rows) {
      py::dict d;
      d["name"]          = r.name;
      d["statement"]     = r.statement;
      d["checked"]       = r.checked;
      d["failures"]      = r.failures;
      d["first_failure"] = r.first_failure;
      d["passed"]        = r.pass();
      out.push_back(d);
    }
    return out;
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite skew lattices and the set-theoretic solutions they induce";

  static py::exception<Error> error(m, "SkewlatError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<SkewLattice>(m, "SkewLattice")
      .def(py::init([](Rows const& meet, Rows const& join) {
             return make_skew_lattice(CayleyPair::from_rows(meet, join));
           }),
           py::arg("meet"), py::arg("join"))
      .def_property_readonly("size", &SkewLattice::size)
      .def("meet", &SkewLattice::meet_at, py::arg("x"), py::arg("y"))
      .def("join", &SkewLattice::join_at, py::arg("x"), py::arg("y"))
      .def_property_readonly("meet_table",
                             [](SkewLattice const& S) {
                               return rows(S.tables().meet_table(), S.size());
                             })
      .def_property_readonly("join_table",
                             [](SkewLattice const& S) {
                               return rows(S.tables().join_table(), S.size());
                             })
      .def("__len__", &SkewLattice::size)
      .def("__eq__", [](SkewLattice const& a, SkewLattice const& b) {
        return a.tables() == b.tables();
      })
      .def("__repr__", [](SkewLattice const& S) {
        return "<SkewLattice of order " + std::to_string(S.size()) + ">";
      });

  m.def("violations", &violations, py::arg("meet"), py::arg("join"),
        "Every failed axiom instance; empty for a skew lattice.");
  m.def("read_algebra",
        [](std::string const& path) {
          return make_skew_lattice(read_algebra(std::filesystem::path(path)).tables);
        },
        py::arg("path"));
  m.def("parse_algebra",
        [](std::string const& text) { return make_skew_lattice(parse_algebra(text).tables); },
        py::arg("text"));
  m.def("to_text", [](SkewLattice const& S) { return to_skewlat_text(S.tables()); },
        py::arg("algebra"));

  m.def("fixed", &fixed, py::arg("name"));
  m.def("chain", [](std::vector<std::size_t> sizes) { return chain(ChainSpec{sizes}); },
        py::arg("sizes"));
  m.def("rectangular", &rectangular, py::arg("left"), py::arg("right"));
  m.def("direct_product", &direct_product, py::arg("s"), py::arg("t"));
  m.def("opposite", &opposite, py::arg("algebra"));
  m.def("dual", &dual, py::arg("algebra"));

  m.def("d_classes", [](SkewLattice const& S) { return d_relation(S).classes(); },
        py::arg("algebra"));
  m.def("structure_report", &structure_report, py::arg("algebra"), py::arg("tsv") = false);

  m.def("classify", &classify_dict, py::arg("algebra"));
  m.def("nc5_free", [](SkewLattice const& S) { return nc5_free(S).free; },
        py::arg("algebra"));
  m.def("holds", &holds_dict, py::arg("algebra"), py::arg("formula"),
        "Checks a bundled identity by name, or a formula in the term syntax.");

  m.def("map_kinds", [] {
    std::vector<std::string> out;
    for (auto k : all_map_kinds()) {
      out.emplace_back(to_string(k));
    }
    return out;
  });
  m.def("braid_check", &braid_dict, py::arg("algebra"), py::arg("kind"),
        "None when the map satisfies the braid relation, else the first failing triple.");
  m.def("solution_report", &report_dict, py::arg("algebra"), py::arg("kind"));

  m.def("enumerate", &enumerate_dict, py::arg("n"), py::arg("satisfy") = std::vector<std::string>{},
        py::arg("falsify") = std::vector<std::string>{}, py::arg("limit") = py::none(),
        py::arg("jobs") = 1u);
  m.def("isomorphic", &isomorphic, py::arg("s"), py::arg("t"));
  m.def("run_theorems", &theorems_list, py::arg("max_n"), py::arg("jobs") = 1u);
}
