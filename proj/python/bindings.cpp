#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semnet/degree_stats.hpp"
#include "semnet/graph.hpp"
#include "semnet/inflection.hpp"
#include "semnet/motifs.hpp"
#include "semnet/pipeline.hpp"
#include "semnet/rewiring.hpp"
#include "semnet/tail.hpp"
#include "semnet/ubcm.hpp"

namespace py = pybind11;
using namespace semnet;

namespace {

Graph graph_from_labels(const std::vector<std::pair<std::string, std::string>>& pairs) {
  GraphBuilder b;
  for (const auto& [u, v] : pairs) b.add_edge(u, v);
  return b.build();
}

py::dict tail_dict(const TailEstimate& t) {
  py::dict d;
  d["gamma_slope"] = t.gamma_slope;
  d["gamma_hill"] = t.gamma_hill;
  d["gamma_moments"] = t.gamma_moments;
  d["gamma_kernel"] = t.gamma_kernel;
  d["xi_hill"] = t.xi_hill;
  d["xi_moments"] = t.xi_moments;
  d["xi_kernel"] = t.xi_kernel;
  d["verdict"] = std::string(to_string(t.verdict));
  d["tail_size"] = t.tail_size;
  d["bandwidth"] = t.bandwidth;
  return d;
}

py::dict calibration_dict(const CalibrationResult& r) {
  py::dict d;
  d["observed"] = r.observed;
  d["calibrated"] = r.calibrated;
  d["log_ratio_std"] = r.log_ratio_std;
  d["used"] = r.used;
  d["excluded"] = r.excluded;
  return d;
}

int run_command(const std::string& name, const std::string& config_json) {
  const auto cfg = RunConfig::from_json(nlohmann::json::parse(config_json));
  if (name == "ingest") return cmd_ingest(cfg).exit_code;
  if (name == "analyze") return cmd_analyze(cfg).exit_code;
  if (name == "calibrate") return cmd_calibrate(cfg).exit_code;
  if (name == "inflection") return cmd_inflection(cfg).exit_code;
  throw UsageError("unknown command: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<UbcmError>(m, "UbcmError", PyExc_RuntimeError);
  py::register_exception<CalibrationError>(m, "CalibrationError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def_static("from_edges",
                  [](std::vector<std::string> labels, const std::vector<Edge>& edges) {
                    return Graph::from_edges(std::move(labels), edges);
                  },
                  py::arg("labels"), py::arg("edges"))
      .def_static("from_label_pairs", &graph_from_labels, py::arg("pairs"))
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("link_count", &Graph::link_count)
      .def_property_readonly("labels", &Graph::labels)
      .def("degree", &Graph::degree)
      .def("degrees", &Graph::degrees)
      .def("max_degree", &Graph::max_degree)
      .def("mean_degree", &Graph::mean_degree)
      .def("neighbors", [](const Graph& g, NodeId v) {
        auto n = g.neighbors(v);
        return std::vector<NodeId>(n.begin(), n.end());
      })
      .def("has_edge", &Graph::has_edge)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph N=" + std::to_string(g.node_count()) + " L=" + std::to_string(g.link_count()) + ">";
      });

  m.def("read_edge_list", &read_edge_list_file, py::arg("path"));
  m.def("write_edge_list", &write_edge_list_file, py::arg("graph"), py::arg("path"));
  m.def("extract_lcc", &extract_lcc);
  m.def("lcc_fraction", [](const Graph& g) { return connected_components(g).lcc_fraction; });

  m.def("degree_density", [](const Graph& g) { return degree_density(g).counts; });
  m.def("annd", [](const Graph& g) {
    const auto s = annd(g);
    return py::make_tuple(s.annd_by_degree, s.rho_d);
  }, "(annd by degree, rho_D)");
  m.def("clustering", [](const Graph& g) {
    const auto c = clustering(g);
    return py::make_tuple(c.local, c.global, c.by_degree);
  }, "(local c_i, c_G, c by degree)");

  m.def("coefficients", [](const Graph& g) {
    const auto c = structural_coefficients(g);
    py::dict d;
    d["s"] = c.similarity.s;
    d["s_wedge"] = c.similarity.s_wedge;
    d["s_head"] = c.similarity.s_head;
    d["c"] = c.complementarity.c;
    d["c_wedge"] = c.complementarity.c_wedge;
    d["c_head"] = c.complementarity.c_head;
    d["graph_s"] = c.similarity.graph_s;
    d["graph_c"] = c.complementarity.graph_c;
    return d;
  });

  m.def("rewire", [](const Graph& g, std::uint64_t seed, double multiplier, double cap) {
    RewireConfig cfg;
    cfg.seed = seed;
    cfg.budget_multiplier = multiplier;
    cfg.attempt_cap_multiplier = cap;
    py::gil_scoped_release release;
    return rewire(g, cfg).graph;
  }, py::arg("graph"), py::arg("seed") = 0, py::arg("multiplier") = 4.0, py::arg("attempt_cap") = 100.0);

  m.def("estimate_tail", [](const std::vector<double>& sample) { return tail_dict(estimate_tail(sample)); },
        py::arg("sample"));
  m.def("estimate_tail_graph", [](const Graph& g) { return tail_dict(estimate_tail(g)); }, py::arg("graph"));

  m.def("fit_ubcm", [](const std::vector<std::size_t>& degrees) {
    const auto model = fit_ubcm(degrees);
    std::vector<double> x(model.node_count());
    for (NodeId i = 0; i < x.size(); ++i) x[i] = model.x(i);
    return py::make_tuple(x, model.residual());
  }, py::arg("degrees"), "(x per node, max degree residual)");

  m.def("calibrate", [](const Graph& g, std::size_t samples, std::uint64_t seed) {
    CalibrationOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    CalibrationPair p;
    {
      py::gil_scoped_release release;
      p = calibrate_coefficients(g, opts);
    }
    py::dict d;
    d["similarity"] = calibration_dict(p.similarity);
    d["complementarity"] = calibration_dict(p.complementarity);
    return d;
  }, py::arg("graph"), py::arg("samples") = 500, py::arg("seed") = 0);

  m.def("run", [](const std::string& command, const std::string& config_json) {
    py::gil_scoped_release release;
    return run_command(command, config_json);
  }, py::arg("command"), py::arg("config_json"), "Runs a pipeline command; returns its exit code.");
}
