#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spq/bottleneck.hpp"
#include "spq/canon.hpp"
#include "spq/experiment.hpp"
#include "spq/generate.hpp"
#include "spq/oracle.hpp"
#include "spq/sssp_asrq.hpp"

namespace py = pybind11;

namespace {

const char* rule_name(spq::ReleaseRule rule) {
  switch (rule) {
    case spq::ReleaseRule::SegmentBridge: return "segment-bridge";
    case spq::ReleaseRule::EdgeSum: return "edge-sum";
    case spq::ReleaseRule::HubTree: return "hub-tree";
    case spq::ReleaseRule::HubSplit: return "hub-split";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(spq, m) {
  m.doc() = "Differentially private range queries over shortest paths";

  py::class_<spq::Graph>(m, "Graph")
      .def_static("from_edges",
                  [](int n, const std::vector<std::tuple<int, int, double, double>>& rows) {
                    std::vector<spq::Edge> edges;
                    edges.reserve(rows.size());
                    for (const auto& [u, v, w, a] : rows)
                      edges.push_back({u, v, w, a});
                    return spq::Graph::build(n, std::move(edges));
                  },
                  py::arg("n"), py::arg("edges"))
      .def_static("from_file", &spq::read_edge_list_file, py::arg("path"))
      .def("to_file", &spq::write_edge_list_file, py::arg("path"))
      .def_property_readonly("vertex_count", &spq::Graph::vertex_count)
      .def_property_readonly("edge_count", &spq::Graph::edge_count)
      .def("edges", [](const spq::Graph& g) {
        std::vector<std::tuple<int, int, double, double>> rows;
        for (const auto& e : g.edges())
          rows.emplace_back(e.u, e.v, e.weight, e.attribute);
        return rows;
      });

  m.def("generate",
        [](const std::string& family, int n, std::uint64_t seed) {
          return spq::generate_graph(spq::parse_family(family), n, seed);
        },
        py::arg("family"), py::arg("n"), py::arg("seed") = 0);

  py::class_<spq::PathIndex>(m, "PathIndex")
      .def_static("build", &spq::PathIndex::build, py::arg("graph"))
      .def("distance", &spq::PathIndex::distance, py::arg("u"), py::arg("v"))
      .def("hop", &spq::PathIndex::hop, py::arg("u"), py::arg("v"))
      .def("path_edges", &spq::PathIndex::path_edges, py::arg("graph"), py::arg("u"),
           py::arg("v"))
      .def("path_vertices", &spq::PathIndex::path_vertices, py::arg("graph"),
           py::arg("u"), py::arg("v"));

  py::class_<spq::CountRelease>(m, "CountRelease")
      .def_property_readonly("vertex_count", &spq::CountRelease::vertex_count)
      .def("value", &spq::CountRelease::value, py::arg("u"), py::arg("v"))
      .def("rule", [](const spq::CountRelease& r, int u, int v) {
        return std::string(rule_name(r.rule(u, v)));
      });

  py::class_<spq::BottleneckRelease>(m, "BottleneckRelease")
      .def_property_readonly("vertex_count", &spq::BottleneckRelease::vertex_count)
      .def("value",
           [](const spq::BottleneckRelease& r, int u, int v) {
             return u == v ? 0.0 : r.value(u, v);
           },
           py::arg("u"), py::arg("v"));

  m.def("canon_apsd",
        [](const spq::Graph& g, const spq::PathIndex& index, double eps,
           std::uint64_t seed, double hub_multiplier, bool noise) {
          return spq::canon_apsd(g, index, {eps, 0.0}, spq::Rng(seed),
                                 {hub_multiplier, noise});
        },
        py::arg("graph"), py::arg("index"), py::arg("eps"), py::arg("seed") = 0,
        py::arg("hub_multiplier") = 1.0, py::arg("noise") = true);

  m.def("sssp_asrq",
        [](const spq::Graph& g, const spq::PathIndex& index, double eps, double delta,
           std::uint64_t seed, double hub_multiplier, bool noise) {
          return spq::sssp_asrq(g, index, {eps, delta}, spq::Rng(seed),
                                {hub_multiplier, noise});
        },
        py::arg("graph"), py::arg("index"), py::arg("eps"), py::arg("delta"),
        py::arg("seed") = 0, py::arg("hub_multiplier") = 1.0, py::arg("noise") = true);

  m.def("bottleneck_release",
        [](const spq::Graph& g, const spq::PathIndex& index, double eps, double delta,
           std::uint64_t seed, bool noise) {
          return spq::bottleneck_release(g, index, {eps, delta}, spq::Rng(seed), noise);
        },
        py::arg("graph"), py::arg("index"), py::arg("eps"), py::arg("delta") = 0.0,
        py::arg("seed") = 0, py::arg("noise") = true);

  m.def("exact_count", &spq::exact_count, py::arg("graph"), py::arg("index"),
        py::arg("u"), py::arg("v"));
  m.def("exact_bottleneck", &spq::exact_bottleneck, py::arg("graph"), py::arg("index"),
        py::arg("u"), py::arg("v"));
}
