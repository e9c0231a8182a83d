#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gzono/flip.hpp"
#include "gzono/graph.hpp"
#include "gzono/ngon.hpp"
#include "gzono/orientation.hpp"
#include "gzono/report.hpp"

namespace py = pybind11;
using namespace gzono;

namespace {

// Python ints are unbounded, so go through the decimal string.
py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list to_py(const FaceVector& f) {
  py::list out;
  for (const auto& c : f.counts()) out.append(to_py(c));
  return out;
}

EnumOptions options(unsigned threads, bool unsafe_caps) {
  EnumOptions o;
  o.threads = threads;
  if (unsafe_caps) o.caps = Caps::unsafe();
  return o;
}

std::vector<std::pair<int, int>> labels(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u + 1, e.v + 1);
  return out;
}

FlipQuad quad_from(const Graph& g, const std::array<int, 4>& v) {
  auto q = make_flip_quad(g, {v[0] - 1, v[1] - 1, v[2] - 1, v[3] - 1});
  if (!q) throw PreconditionError("not a flip site");
  return *q;
}

using QuadTuple = std::tuple<int, int, int, int>;

QuadTuple quad_labels(const FlipQuad& q) { return {q.v[0] + 1, q.v[1] + 1, q.v[2] + 1, q.v[3] + 1}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Face vectors of graphical zonotopes, quadrilateral flips and n-gon triangulations.";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(parse_error.ptr(), e.what());
    } catch (const CapExceeded& e) {
      PyErr_SetString(cap_exceeded.ptr(), e.what());
    }
  });

  py::class_<Graph>(m, "Graph", "Simple undirected graph; vertices are labeled 1..n.")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph::from_labels(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges", &labels)
      .def("is_connected", [](const Graph& g) { return connected(g); })
      .def("to_text", [](const Graph& g) {
        std::ostringstream out;
        write_graph(out, g);
        return out.str();
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("read_graph", &read_graph_file, py::arg("path"));
  m.def("parse_graph", [](const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
  }, py::arg("text"));

  m.def("face_vector", [](const Graph& g, unsigned threads, bool unsafe_caps) {
    FaceVector f;
    {
      py::gil_scoped_release release;
      f = face_vector(g, options(threads, unsafe_caps));
    }
    return to_py(f);
  }, py::arg("graph"), py::arg("threads") = 1, py::arg("unsafe_caps") = false);

  m.def("covectors", [](const Graph& g, bool unsafe_caps) {
    std::vector<std::string> out;
    for (const auto& x : covector_signs(g, options(1, unsafe_caps))) out.push_back(x.to_string());
    return out;
  }, py::arg("graph"), py::arg("unsafe_caps") = false,
     "Covectors as strings over '0', '+', '-' in edge order, sorted with 0 < + < -.");

  m.def("is_covector", [](const Graph& g, const std::string& signs) {
    return is_covector(PartialOrientation(g, SignVector::parse(signs)));
  }, py::arg("graph"), py::arg("signs"));

  m.def("count_acyclic_orientations", [](const Graph& g) { return to_py(count_acyclic_orientations(g)); },
        py::arg("graph"));

  m.def("find_flip_quads", [](const Graph& g) {
    std::vector<QuadTuple> out;
    for (const auto& q : find_flip_quads(g)) out.push_back(quad_labels(q));
    return out;
  }, py::arg("graph"));

  m.def("apply_flip", [](const Graph& g, const std::array<int, 4>& quad) { return apply_flip(g, quad_from(g, quad)); },
        py::arg("graph"), py::arg("quad"));

  m.def("verify_flip", [](const Graph& g, const std::array<int, 4>& quad, bool unsafe_caps) {
    const auto r = verify_flip_theorem(g, quad_from(g, quad), options(1, unsafe_caps));
    py::dict d;
    d["before"] = to_py(r.before);
    d["after"] = to_py(r.after);
    d["face_vectors_equal"] = r.face_vectors_equal;
    d["injective"] = r.injective;
    d["rank_preserving"] = r.rank_preserving;
    d["image_is_covector_set"] = r.image_is_covector_set;
    d["inverse_is_identity"] = r.inverse_is_identity;
    d["ok"] = r.ok();
    return d;
  }, py::arg("graph"), py::arg("quad"), py::arg("unsafe_caps") = false);

  m.def("flip_bijection", [](const Graph& g, const std::array<int, 4>& quad, const std::string& signs) {
    return flip_bijection(g, quad_from(g, quad), SignVector::parse(signs)).to_string();
  }, py::arg("graph"), py::arg("quad"), py::arg("signs"));

  m.def("flip_equivalence_search", [](const Graph& a, const Graph& b, int max_depth) -> py::object {
    const auto path = flip_equivalence_search(a, b, max_depth);
    if (!path) return py::none();
    std::vector<QuadTuple> steps;
    for (const auto& q : path->steps) steps.push_back(quad_labels(q));
    return py::cast(steps);
  }, py::arg("g1"), py::arg("g2"), py::arg("max_depth") = 8);

  m.def("fan_triangulation", &fan_triangulation, py::arg("n"));
  m.def("polygon_triangulations", [](int n) { return enumerate_polygon_triangulations(n); }, py::arg("n"));
  m.def("tree_shape_corpus", &tree_shape_corpus, py::arg("k"), py::arg("seed"), py::arg("count") = 1);

  m.def("face_vector_formula", [](int n) { return to_py(face_vector_formula(n)); }, py::arg("n"));
  m.def("total_faces", [](int n) { return to_py(total_faces_matrix(n)); }, py::arg("n"),
        "Total face count for a triangulation of the (n+2)-gon.");
  m.def("count_full_caterpillar_vectors", [](int n) { return to_py(count_full_caterpillar_vectors(n)); },
        py::arg("n"));
  m.def("ngon_table", [](int max_n, const std::string& format) {
    if (format == "csv") return ngon_table_csv(max_n);
    if (format == "text") return ngon_table_text(max_n);
    throw PreconditionError("format must be 'text' or 'csv'");
  }, py::arg("max_n") = 8, py::arg("format") = "text");
}
