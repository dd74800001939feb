#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latcount/cli.hpp"
#include "latcount/io.hpp"
#include "latcount/oracle.hpp"

namespace py = pybind11;
using namespace latcount;

namespace {

// Python ints and Fractions cross the boundary as decimal strings.
Int to_int(const py::handle& h) {
  Int x;
  if (x.set_str(py::str(h).cast<std::string>(), 10) != 0) throw py::value_error("expected an integer");
  return x;
}

Rat to_rat(const py::handle& h) {
  Rat x;
  if (x.set_str(py::str(h).cast<std::string>(), 10) != 0) throw py::value_error("expected a rational number");
  x.canonicalize();
  if (x.get_den() == 0) throw py::value_error("zero denominator");
  return x;
}

py::object from_int(const Int& x) { return py::module_::import("builtins").attr("int")(x.get_str()); }

py::object from_rat(const Rat& x) {
  return py::module_::import("fractions").attr("Fraction")(x.get_str());
}

IntVector int_vector(const py::sequence& s) {
  IntVector v;
  for (auto h : s) v.push_back(to_int(h));
  return v;
}

RatVector rat_vector(const py::sequence& s) {
  RatVector v;
  for (auto h : s) v.push_back(to_rat(h));
  return v;
}

IntMatrix int_matrix(const py::sequence& rows) {
  std::vector<IntVector> r;
  for (auto h : rows) r.push_back(int_vector(h.cast<py::sequence>()));
  return IntMatrix::from_rows(r);
}

py::list to_list(const IntMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(from_int(m(i, j)));
    out.append(row);
  }
  return out;
}

py::list to_list(const IntVector& v) {
  py::list out;
  for (const auto& x : v) out.append(from_int(x));
  return out;
}

HPolytope polytope(const py::sequence& A, const py::sequence& b) {
  HPolytope P{int_matrix(A), int_vector(b)};
  if (P.A.rows() != P.b.size()) throw py::value_error("A and b have different row counts");
  return P;
}

ParametricPolytope parametric(const py::sequence& A, const py::sequence& E, const py::sequence& f,
                              const py::object& Q) {
  ParametricPolytope pp{int_matrix(A), int_matrix(E), int_vector(f), {}};
  if (!Q.is_none())
    for (auto row : Q.cast<py::sequence>()) {
      auto pair = row.cast<py::sequence>();
      if (py::len(pair) != 2) throw py::value_error("Q rows are (g, h) pairs");
      pp.Q.add_row(int_vector(pair[0].cast<py::sequence>()), to_rat(pair[1]));
    }
  validate(pp);
  return pp;
}

py::object evaluation(const Evaluation& e) {
  if (!e.diagnostic.empty()) {
    auto warnings = py::module_::import("warnings");
    warnings.attr("warn")(e.diagnostic);
  }
  return from_int(e.count);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice-point counting in rational polytopes.";

  // Translators are tried in reverse order of registration: base class first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SemanticError>(m, "SemanticError", PyExc_ValueError);

  m.def(
      "count_polytope",
      [](const py::sequence& A, const py::sequence& b, const py::object& max_index) {
        return from_int(count_polytope(polytope(A, b), to_int(max_index)));
      },
      py::arg("A"), py::arg("b"), py::arg("max_index") = 1,
      "Number of integer points of {x : A x <= b}.");

  m.def(
      "count_polytope_detailed",
      [](const py::sequence& A, const py::sequence& b, const py::object& max_index) {
        CountResult r = count_polytope_detailed(polytope(A, b), to_int(max_index));
        py::dict d;
        d["count"] = from_int(r.count);
        d["num_vertices"] = r.num_vertices;
        d["num_cones"] = r.num_cones;
        d["max_depth"] = r.max_depth;
        return d;
      },
      py::arg("A"), py::arg("b"), py::arg("max_index") = 1);

  m.def(
      "brute_count",
      [](const py::sequence& A, const py::sequence& b, std::uint64_t cap) {
        return from_int(brute_count(polytope(A, b), cap));
      },
      py::arg("A"), py::arg("b"), py::arg("cap") = kDefaultOracleCap);

  m.def(
      "parse_polytope",
      [](const std::string& text) {
        HPolytope P = parse_polytope(text);
        return py::make_tuple(to_list(P.A), to_list(P.b));
      },
      py::arg("text"));

  m.def(
      "smith_normal_form",
      [](const py::sequence& B) {
        SmithDecomposition s = smith_normal_form(int_matrix(B));
        return py::make_tuple(to_list(s.V), to_list(s.W), to_list(s.s));
      },
      py::arg("B"), "Returns (V, W, s) with B V = W diag(s).");

  m.def(
      "facet_strictness",
      [](const std::vector<int>& sigma, const py::sequence& alpha, std::size_t l, std::size_t m) {
        return facet_strictness(sigma, rat_vector(alpha), l, m);
      },
      py::arg("sigma"), py::arg("alpha"), py::arg("l"), py::arg("m"));

  m.def(
      "find_w",
      [](const py::sequence& rays) {
        ExtraRay e = find_w(IntMatrix::from_columns([&] {
          std::vector<IntVector> r;
          for (auto h : rays) r.push_back(int_vector(h.cast<py::sequence>()));
          return r;
        }()));
        py::list alpha;
        for (const auto& a : e.alpha) alpha.append(from_rat(a));
        return py::make_tuple(to_list(e.w), alpha);
      },
      py::arg("rays"), "Extra ray w and its coefficients for the cone spanned by `rays`.");

  py::class_<ParametricCounter>(m, "ParametricCounter")
      .def(py::init([](const py::sequence& A, const py::sequence& E, const py::sequence& f, const py::object& Q,
                       const py::object& max_index) {
             return ParametricCounter(parametric(A, E, f, Q), to_int(max_index));
           }),
           py::arg("A"), py::arg("E"), py::arg("f"), py::arg("Q") = py::none(), py::arg("max_index") = 1,
           "P_q = {x : A x <= E q + f}, q in {q : g.q <= h for (g, h) in Q}.")
      .def("evaluate", [](const ParametricCounter& c, const py::sequence& q) { return evaluation(c.evaluate(rat_vector(q))); })
      .def("evaluate_by_activity",
           [](const ParametricCounter& c, const py::sequence& q) {
             return evaluation(c.evaluate_by_activity(rat_vector(q)));
           })
      .def_property_readonly("num_vertices", [](const ParametricCounter& c) { return c.vertices().size(); })
      .def_property_readonly("num_chambers", [](const ParametricCounter& c) { return c.chambers().size(); })
      .def_property_readonly("num_cones", &ParametricCounter::num_cones);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool; returns (exit_code, stdout, stderr).");
}
