#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eccspec/report.hpp"
#include "eccspec/verify.hpp"

namespace py = pybind11;
using namespace eccspec;

namespace {

// Reports cross the boundary as plain dicts, decoded by the stdlib json module.
py::object to_python(const Json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

Settings make_settings(py::kwargs kwargs) {
  Settings s = settings_from_environment();
  for (auto [key, value] : kwargs) {
    const auto name = key.cast<std::string>();
    if (name == "equality_tol") s.equality_tol = value.cast<double>();
    else if (name == "tightness_tol") s.tightness_tol = value.cast<double>();
    else if (name == "energy_tol") s.energy_tol = value.cast<double>();
    else if (name == "bucket_tol") s.bucket_tol = value.cast<double>();
    else if (name == "jobs") s.jobs = value.cast<int>();
    else if (name == "seed") s.seed = value.cast<std::uint64_t>();
    else if (name == "allow_large") s.allow_large = value.cast<bool>();
    else if (name == "cache_dir") s.cache_dir = value.cast<std::string>();
    else throw py::type_error("unknown setting '" + name + "'");
  }
  s.validate();
  return s;
}

Universe universe_of(std::optional<std::vector<Graph>> graphs, int n_max, const Settings& s) {
  if (!graphs) return Universe::exhaustive(1, n_max, s);
  Universe u;
  u.description = std::to_string(graphs->size()) + " graphs";
  u.graphs = std::move(*graphs);
  return u;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Eccentricity matrices of graphs: invariants, spectra and bound checks.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<DisconnectedError>(m, "DisconnectedError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", &parse_graph6, py::arg("text"))
      .def_static("from_edge_list", &parse_edge_list, py::arg("text"))
      .def("graph6", &to_graph6)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  m.def("family", [](const std::string& spec) { return make_family(parse_family_spec(spec)); }, py::arg("spec"));
  m.def("star", &star);
  m.def("path", &path);
  m.def("cycle", &cycle);
  m.def("complete", &complete);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("complete_multipartite", &complete_multipartite);
  m.def("crown", &crown);
  m.def("random_connected_graph", &random_connected_graph, py::arg("n"), py::arg("edge_prob"), py::arg("seed"));
  m.def("trees", [](int n) { return tree_corpus(n); }, py::arg("n"));
  m.def("connected_graphs", [](int n, bool allow_large) { return connected_graph_corpus(n, {}, allow_large); },
        py::arg("n"), py::arg("allow_large") = false);
  m.def("canonical_form", &canonical_form);
  m.def("is_connected", &is_connected);

  m.def("eccentricity_matrix", [](const Graph& g) { return eccentricity_matrix(metric(g)).rows(); });
  m.def("distance_matrix", [](const Graph& g) { return distance_matrix(metric(g)).rows(); });
  m.def("eigenvalues", [](const Graph& g) { return eigenvalues_sym(eccentricity_matrix(metric(g))).values; });
  m.def("determinant", [](const Graph& g) {
    return py::int_(py::str(determinant_exact(eccentricity_matrix(metric(g))).str()));
  });
  m.def("char_poly", [](const Graph& g) {
    py::list out;
    for (const auto& c : char_poly_exact(eccentricity_matrix(metric(g))).coeffs) out.append(py::int_(py::str(c.str())));
    return out;
  }, "Coefficients of det(xI - eps), lowest degree first.");

  m.def("compute", [](const Graph& g) { return to_python(compute_report(g)); });
  m.def("spectrum", [](const Graph& g) { return to_python(spectrum_report(g)); });
  m.def("bounds", [](const Graph& g) { return to_python(bounds_report(g)); });

  m.def("check_ids", &check_ids);
  m.def(
      "verify",
      [](const std::string& id, std::optional<std::vector<Graph>> graphs, int n_min, int n_max, int half_n, int p_max,
         int samples, py::kwargs kwargs) {
        const Settings s = make_settings(kwargs);
        CheckReport r;
        {
          py::gil_scoped_release release;
          if (id == "star-invertibility") r = check_star_invertibility(n_min, n_max, s);
          else if (id == "diam2-max") r = check_diam2_max(n_max, s);
          else if (id == "radius-lower-bound") r = check_radius_lower_bound(universe_of(graphs, n_max, s), s);
          else if (id == "bipartite-min") r = check_bipartite_min(half_n, s);
          else if (id == "wiener-bound") r = check_wiener_bound(universe_of(graphs, n_max, s), s);
          else if (id == "diam2-bound") r = check_diam2_bound(universe_of(graphs, n_max, s), s);
          else if (id == "quotient-bound") r = check_quotient_bound(universe_of(graphs, n_max, s), s);
          else if (id == "partite-energy") r = check_partite_energy(p_max, samples, s);
          else if (id == "equienergetic") r = search_equienergetic(n_max, s);
          else if (id == "domination") r = check_domination(universe_of(graphs, n_max, s), s);
          else throw ContractError("unknown check id '" + id + "'");
        }
        return to_python(to_json(r));
      },
      py::arg("check"), py::arg("graphs") = py::none(), py::arg("n_min") = 5, py::arg("n_max") = 7,
      py::arg("half_n") = 3, py::arg("p_max") = 20, py::arg("samples") = 50,
      "Runs one named check and returns its report as a dict. Settings such as\n"
      "equality_tol or jobs may be passed as keyword arguments.");
}
