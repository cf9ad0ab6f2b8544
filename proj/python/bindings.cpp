#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "sigcolor/bounds.hpp"
#include "sigcolor/constructive.hpp"
#include "sigcolor/errors.hpp"
#include "sigcolor/generators.hpp"
#include "sigcolor/sg_format.hpp"
#include "sigcolor/solver.hpp"

namespace py = pybind11;
using namespace sigcolor;

namespace {

py::object to_fraction(const Rational& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(x.numerator_str())), py::int_(py::str(x.denominator_str())));
}

Rational from_py(const py::handle& obj) { return Rational::parse(std::string(py::str(obj))); }

Sign sign_from_py(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) {
    const auto s = obj.cast<std::string>();
    if (s == "+") return Sign::positive;
    if (s == "-") return Sign::negative;
  } else if (py::isinstance<py::int_>(obj)) {
    const int v = obj.cast<int>();
    if (v == 1) return Sign::positive;
    if (v == -1) return Sign::negative;
  }
  throw InvalidArgument("edge sign must be '+', '-', 1 or -1");
}

SignedGraph graph_from_py(int n, const py::iterable& edges) {
  SignedGraph g(n);
  for (const py::handle& item : edges) {
    const auto t = item.cast<py::tuple>();
    if (t.size() != 3) throw InvalidArgument("edges are (u, v, sign) triples");
    g.add_edge(t[0].cast<int>(), t[1].cast<int>(), sign_from_py(t[2]));
  }
  return g;
}

py::list edges_to_py(const SignedGraph& g) {
  py::list out;
  for (const Edge& e : g.edges()) out.append(py::make_tuple(e.u, e.v, std::string(1, sign_char(e.sign))));
  return out;
}

Coloring coloring_from_py(const py::handle& r, const py::iterable& points) {
  std::vector<Rational> f;
  for (const py::handle& p : points) f.push_back(from_py(p));
  return {from_py(r), std::move(f)};
}

py::list points_to_py(const Coloring& c) {
  py::list out;
  for (const Rational& p : c.f) out.append(to_fraction(p));
  return out;
}

py::dict certificate_to_py(const Certificate& cert) {
  py::dict d;
  d["switch_set"] = cert.switch_set.members();
  d["r"] = to_fraction(cert.coloring.r);
  d["f"] = points_to_py(cert.coloring);
  return d;
}

}  // namespace

PYBIND11_MODULE(_sigcolor, m) {
  m.doc() = "Exact circular coloring of signed graphs";

  py::register_exception<Error>(m, "SigcolorError", PyExc_ValueError);

  py::class_<SignedGraph>(m, "SignedGraph")
      .def(py::init(&graph_from_py), py::arg("n"), py::arg("edges") = py::list())
      .def_property_readonly("n", &SignedGraph::n)
      .def_property_readonly("m", &SignedGraph::m)
      .def_property_readonly("edges", &edges_to_py)
      .def("is_simple", &SignedGraph::is_simple)
      .def("neighbors", &SignedGraph::neighbors)
      .def("to_sg", [](const SignedGraph& g) { return format_sg(g); })
      .def_static("from_sg", [](const std::string& text) { return parse_sg(text); })
      .def("__eq__", [](const SignedGraph& a, const SignedGraph& b) { return a == b; })
      .def("__repr__", [](const SignedGraph& g) {
        return "SignedGraph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  m.def("switching", [](const SignedGraph& g, const std::vector<int>& s) { return switching(g, SwitchSet(s)); });
  m.def("equivalence_witness", [](const SignedGraph& a, const SignedGraph& b) -> py::object {
    const auto w = equivalence_witness(a, b);
    if (!w) return py::none();
    return py::cast(w->members());
  });
  m.def("is_equivalent", &is_equivalent);
  m.def("is_bipartite", &is_bipartite);
  m.def("degeneracy_order", &degeneracy_order, py::arg("g"), py::arg("k"));

  m.def("omega", &omega);
  m.def("gamma_star", &gamma_star);
  m.def("s_of", &s_of);
  m.def("t2_of", &t2_of);
  m.def("complete", [](int n, const py::object& sign) { return complete(n, sign_from_py(sign)); },
        py::arg("n"), py::arg("sign") = "+");
  m.def("cycle", [](int n, const std::string& pattern) { return cycle(n, pattern); });
  m.def("f_u", [](const SignedGraph& g, int u) {
    const Contraction c = f_u(g, u);
    return py::make_tuple(c.graph, c.z);
  });
  m.def("f_uv", &f_uv);

  m.def("verify_coloring", [](const SignedGraph& g, const py::object& r, const py::iterable& f) {
    const VerifyResult res = verify_coloring(g, coloring_from_py(r, f));
    return py::make_tuple(res.ok(), res.ok() ? std::string() : res.violation->reason);
  });
  m.def("transform_4eps", [](const py::object& r, const py::iterable& f) {
    const Coloring c = transform_4eps(coloring_from_py(r, f));
    return py::make_tuple(to_fraction(c.r), points_to_py(c));
  });

  m.def("chi_c", [](const SignedGraph& g, int jobs) {
    SolverOptions options;
    options.jobs = jobs;
    ChiResult res;
    {
      py::gil_scoped_release release;
      res = chi_c(g, options);
    }
    py::dict d;
    if (res.infinite) {
      d["chi_c"] = py::float_(std::numeric_limits<double>::infinity());
      return d;
    }
    d["chi_c"] = to_fraction(res.value);
    d["p"] = res.p;
    d["q"] = res.q;
    d["witness"] = points_to_py(*res.witness);
    return d;
  }, py::arg("g"), py::arg("jobs") = 1);
  m.def("is_hom_feasible", [](const SignedGraph& g, int p, int q) {
    return is_hom_feasible(g, SignedCircularClique(p, q));
  });

  m.def("color_2degenerate", [](const SignedGraph& g) { return certificate_to_py(color_2degenerate(g)); });
  m.def("lift_fu", [](const SignedGraph& g, int u, const py::object& r, const py::iterable& f) {
    return certificate_to_py(lift_fu(g, u, coloring_from_py(r, f)));
  });
  m.def("lift_fuv", [](const SignedGraph& g, int u, int v, const py::object& r, const py::iterable& f) {
    const Coloring c = lift_fuv(g, u, v, coloring_from_py(r, f));
    return py::make_tuple(to_fraction(c.r), points_to_py(c));
  });

  m.def("bound_2degenerate", [](int n) { return to_fraction(bound_2degenerate(n)); });
  m.def("bound_bipartite_planar", [](int n) { return to_fraction(bound_bipartite_planar(n)); });
  m.def("sg_formula", [](const py::object& x) { return to_fraction(sg_formula(from_py(x))); });
  m.def("t2_formula", [](const py::object& x) { return to_fraction(t2_formula(from_py(x))); });
}
