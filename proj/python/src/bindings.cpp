#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordcone/cone.hpp"
#include "ordcone/dominance.hpp"
#include "ordcone/errors.hpp"
#include "ordcone/io.hpp"
#include "ordcone/oracle.hpp"
#include "ordcone/pathsolve.hpp"

namespace py = pybind11;
using namespace ordcone;

// Exact numbers cross the boundary as fractions.Fraction. Python ints and
// strings ("3/4", "0.25") are accepted on input; floats are refused.
namespace pybind11::detail {

template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    try {
      if (PyLong_Check(src.ptr())) {
        value = Rational::parse(py::str(src).cast<std::string>());
        return true;
      }
      if (PyUnicode_Check(src.ptr())) {
        value = Rational::parse(src.cast<std::string>());
        return true;
      }
      if (py::isinstance(src, py::module_::import("numbers").attr("Rational"))) {
        value = Rational::parse(py::str(src.attr("numerator")).cast<std::string>() + "/" +
                                py::str(src.attr("denominator")).cast<std::string>());
        return true;
      }
    } catch (const ParseError&) {
    }
    return false;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    const auto to_int = py::module_::import("builtins").attr("int");
    return py::module_::import("fractions")
        .attr("Fraction")(to_int(r.numerator()), to_int(r.denominator()))
        .release();
  }
};

template <>
struct type_caster<RatVector> {
  PYBIND11_TYPE_CASTER(RatVector, const_name("list[fractions.Fraction]"));

  bool load(handle src, bool convert) {
    if (!py::isinstance<py::sequence>(src) || PyUnicode_Check(src.ptr())) return false;
    RatVector out;
    for (auto item : py::reinterpret_borrow<py::sequence>(src)) {
      make_caster<Rational> c;
      if (!c.load(item, convert)) return false;
      out.push_back(cast_op<Rational&&>(std::move(c)));
    }
    value = std::move(out);
    return true;
  }

  static handle cast(const RatVector& v, return_value_policy p, handle parent) {
    py::list out;
    for (const auto& x : v) out.append(py::reinterpret_steal<py::object>(make_caster<Rational>::cast(x, p, parent)));
    return out.release();
  }
};

template <>
struct type_caster<RatMatrix> {
  PYBIND11_TYPE_CASTER(RatMatrix, const_name("list[list[fractions.Fraction]]"));

  bool load(handle src, bool convert) {
    if (!py::isinstance<py::sequence>(src)) return false;
    std::vector<RatVector> rows;
    for (auto item : py::reinterpret_borrow<py::sequence>(src)) {
      make_caster<RatVector> c;
      if (!c.load(item, convert)) return false;
      rows.push_back(cast_op<RatVector&&>(std::move(c)));
    }
    try {
      value = RatMatrix(std::move(rows));
    } catch (const Error&) {
      return false;
    }
    return true;
  }

  static handle cast(const RatMatrix& m, return_value_policy p, handle parent) {
    py::list out;
    for (const auto& r : m.row_list())
      out.append(py::reinterpret_steal<py::object>(make_caster<RatVector>::cast(r, p, parent)));
    return out.release();
  }
};

}  // namespace pybind11::detail

namespace {

ConeHRep cone_for(const Weights& w, bool merge) {
  if (!w.is_pointed() && !merge) throw NotPointed("degenerate weights " + w.str() + "; pass merge=True");
  return effective_cone(w);
}

PathMode mode_from(const std::string& s) {
  if (auto m = path_mode_from_string(s)) return *m;
  throw py::value_error("mode must be 'one_per_vector' or 'all_paths'");
}

py::dict path_dict(const CategoryGraph& g, const EfficientPath& p) {
  std::vector<std::string> ids;
  for (std::size_t v : p.path.nodes) ids.push_back(g.node(v).id);
  py::dict d;
  d["nodes"] = ids;
  d["edges"] = p.path.edges;
  d["counts"] = p.counts;
  d["transformed"] = p.transformed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weighted ordinal dominance cones and efficient routes, in exact arithmetic";

  auto base = py::register_exception<Error>(m, "OrdconeError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<WeightError>(m, "WeightError", base.ptr());
  py::register_exception<NotPointed>(m, "NotPointed", base.ptr());
  py::register_exception<PathCapExceeded>(m, "PathCapExceeded", base.ptr());
  py::register_exception<UnknownNode>(m, "UnknownNode", base.ptr());
  py::register_exception<GraphError>(m, "GraphError", base.ptr());

  py::class_<Weights>(m, "Weights")
      .def(py::init(&Weights::classify), py::arg("K"), py::arg("omega"), py::arg("gamma"))
      .def_static("uniform", &Weights::uniform, py::arg("K"), py::arg("omega"), py::arg("gamma"))
      .def_property_readonly("K", &Weights::K)
      .def_property_readonly("omega", &Weights::omega)
      .def_property_readonly("gamma", &Weights::gamma)
      .def_property_readonly("is_pointed", &Weights::is_pointed)
      .def_property_readonly("degenerate_indices", &Weights::degenerate_indices)
      .def("componentwise_leq", &Weights::componentwise_leq)
      .def("__eq__", [](const Weights& a, const Weights& b) { return a == b; })
      .def("__repr__", [](const Weights& w) { return "Weights(" + w.str() + ")"; });

  m.def("facet_matrix", [](const Weights& w) { return facet_matrix(w).facets; }, py::arg("w"));
  m.def("facet_selections", [](const Weights& w) {
    std::vector<std::string> out;
    for (const auto& s : facet_matrix(w).selection) out.push_back(to_string(s));
    return out;
  });
  m.def("facet_count", &facet_count, py::arg("w"));
  m.def("spanning_rays", [](const Weights& w) { return spanning_rays(w).columns(); }, py::arg("w"));
  m.def("extreme_rays", [](const Weights& w) { return spanning_rays(w).extreme_columns(); }, py::arg("w"));
  m.def("representation_matrix", &representation_matrix, py::arg("w"));
  m.def("dual_contains", &dual_contains, py::arg("w"), py::arg("nu"));
  m.def("special_kinds", [](const Weights& w) {
    std::vector<std::string> out;
    for (auto k : applicable_special_kinds(w)) out.push_back(to_string(k));
    return out;
  });
  m.def(
      "special_matrix",
      [](const std::string& kind, const Weights& w) {
        const auto k = special_kind_from_string(kind);
        if (!k) throw py::value_error("unknown special kind '" + kind + "'");
        return special_matrix(*k, w);
      },
      py::arg("kind"), py::arg("w"));
  m.def("double_description", [](const Weights& w) { return double_description(spanning_rays(w)); }, py::arg("w"));

  m.def(
      "merge_degenerate",
      [](const Weights& w) {
        auto r = merge_degenerate(w);
        py::dict d;
        d["merged"] = r.merged;
        d["lift"] = r.lift;
        d["category_map"] = r.category_map;
        return d;
      },
      py::arg("w"));
  m.def("effective_cone", [](const Weights& w) { return effective_cone(w).facets; }, py::arg("w"));

  m.def(
      "weakly_dominates",
      [](const Weights& w, const RatVector& y1, const RatVector& y2, bool merge) {
        return weakly_dominates(cone_for(w, merge), y1, y2);
      },
      py::arg("w"), py::arg("y1"), py::arg("y2"), py::arg("merge") = false);
  m.def(
      "dominates",
      [](const Weights& w, const RatVector& y1, const RatVector& y2, bool merge) {
        return dominates(cone_for(w, merge), y1, y2);
      },
      py::arg("w"), py::arg("y1"), py::arg("y2"), py::arg("merge") = false);
  m.def(
      "ray_membership",
      [](const Weights& w, const RatVector& v) { return ray_membership(spanning_rays(w), v).feasible; },
      py::arg("w"), py::arg("v"));
  m.def(
      "nondominated",
      [](const Weights& w, const std::vector<RatVector>& points, bool merge) {
        return nondominated_indices(cone_for(w, merge), points);
      },
      py::arg("w"), py::arg("points"), py::arg("merge") = false,
      "Indices of the points not dominated by any other point.");

  py::class_<CategoryGraph>(m, "CategoryGraph")
      .def(py::init<std::size_t>(), py::arg("K"))
      .def("add_node", &CategoryGraph::add_node, py::arg("id"), py::arg("lat") = py::none(),
           py::arg("lon") = py::none())
      .def("add_edge", &CategoryGraph::add_edge, py::arg("source"), py::arg("target"), py::arg("category"),
           py::arg("length"))
      .def_property_readonly("K", &CategoryGraph::K)
      .def_property_readonly("node_count", &CategoryGraph::node_count)
      .def_property_readonly("edge_count", &CategoryGraph::edge_count)
      .def("to_json", &dump_graph);
  m.def("parse_graph", &parse_graph, py::arg("text"));
  m.def("load_graph", &load_graph, py::arg("path"));

  m.def(
      "efficient_paths",
      [](const CategoryGraph& g, const std::string& source, const std::string& target, const Weights& w,
         const std::string& mode, std::size_t cap, bool merge) {
        SolveOptions opt;
        opt.mode = mode_from(mode);
        opt.cap = cap;
        opt.merge_degenerate = merge;
        std::vector<EfficientPath> paths;
        {
          py::gil_scoped_release release;
          paths = efficient_paths(g, g.node_index(source), g.node_index(target), w, opt);
        }
        py::list out;
        for (const auto& p : paths) out.append(path_dict(g, p));
        return out;
      },
      py::arg("graph"), py::arg("source"), py::arg("target"), py::arg("w"), py::arg("mode") = "one_per_vector",
      py::arg("cap") = 100000, py::arg("merge") = false);

  m.def(
      "weight_sweep",
      [](const CategoryGraph& g, const std::string& source, const std::string& target,
         const std::vector<Weights>& grid, std::size_t threads, bool merge) {
        SolveOptions opt;
        opt.merge_degenerate = merge;
        std::vector<SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = weight_sweep(g, g.node_index(source), g.node_index(target), grid, opt, threads);
        }
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["weights"] = r.weights;
          d["efficient_vectors"] = r.efficient_vectors;
          d["efficient_paths"] = r.efficient_paths;
          d["runtime_ms"] = r.runtime_ms;
          d["error"] = r.error;
          out.append(d);
        }
        return out;
      },
      py::arg("graph"), py::arg("source"), py::arg("target"), py::arg("grid"), py::arg("threads") = 1,
      py::arg("merge") = false);
}
