// Python bindings for the coalition-partition library. Vertex sets cross the
// boundary as plain lists of ints, partitions as lists of lists, and
// structured results (certificates, witnesses, reports) as the same JSON
// objects the CLI prints, converted to native python dicts.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mincoal/coalition.hpp"
#include "mincoal/corpus.hpp"
#include "mincoal/domination.hpp"
#include "mincoal/graph.hpp"
#include "mincoal/partition.hpp"
#include "mincoal/recognize.hpp"
#include "mincoal/verify.hpp"

namespace py = pybind11;
using namespace mincoal;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

VertexSet set_from(const Graph& g, const std::vector<int>& vs) {
  VertexSet s;
  for (int v : vs) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    s.add(v);
  }
  return s;
}

SetPartition partition_from(const Graph& g, const std::vector<std::vector<int>>& blocks) {
  std::vector<VertexSet> sets;
  sets.reserve(blocks.size());
  for (const auto& b : blocks) sets.push_back(set_from(g, b));
  return SetPartition::of(g.order(), std::move(sets));
}

py::object result_to_py(const CminResult& r) { return json_to_py(r.to_json()); }

CminResult cmin_with_method(const Graph& g, const std::string& method) {
  if (method == "auto") return cmin_dispatch(g);
  if (method == "brute") return cmin_bruteforce(g);
  if (method == "fast") return cmin_dispatch(g, /*fast_only=*/true);
  throw std::invalid_argument("unknown method '" + method + "' (auto|brute|fast)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coalition partitions of graphs on at most 62 vertices";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("order"),
           py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def("order", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).vertices(); },
           py::arg("v"))
      .def("min_degree", &Graph::min_degree)
      .def("max_degree", &Graph::max_degree)
      .def("has_universal_vertex", &Graph::has_universal_vertex)
      .def("universal_vertices", [](const Graph& g) { return g.universal_vertices().vertices(); })
      .def("is_connected", &Graph::is_connected)
      .def("is_complete", &Graph::is_complete)
      .def("is_tree", &Graph::is_tree)
      .def("is_cycle", &Graph::is_cycle)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (int u = 0; u < g.order(); ++u)
               for (int v = u + 1; v < g.order(); ++v)
                 if (g.has_edge(u, v)) out.emplace_back(u, v);
             return out;
           })
      .def(py::self == py::self)
      .def("__repr__",
           [](const Graph& g) { return "Graph(graph6='" + graph6_encode(g) + "')"; });

  // Generators.
  m.def("empty_graph", &empty_graph, py::arg("order"));
  m.def("complete_graph", &complete_graph, py::arg("order"));
  m.def("path_graph", &path_graph, py::arg("order"));
  m.def("cycle_graph", &cycle_graph, py::arg("order"));
  m.def("star_graph", &star_graph, py::arg("leaves"));
  m.def("complete_multipartite_graph", &complete_multipartite_graph, py::arg("part_sizes"));
  m.def("petersen_graph", &petersen_graph);
  m.def("heawood_graph", &heawood_graph);
  m.def("join_graphs", &join_graphs, py::arg("left"), py::arg("right"),
        "Join: both graphs plus every edge between them; left keeps its labels.");
  m.def(
      "generate_family_f",
      [](int core_order, const std::vector<std::pair<int, int>>& core_edges) {
        return generate_family_F(core_order, core_edges);
      },
      py::arg("core_order"), py::arg("core_edges") = std::vector<std::pair<int, int>>{},
      "Apex vertex 0 joined to nonadjacent hubs 1 and 2; hubs joined to the core 3..");

  // graph6 codec.
  m.def("graph6_encode", &graph6_encode, py::arg("graph"));
  m.def("graph6_decode", &graph6_decode, py::arg("text"));

  // Domination.
  m.def(
      "is_dominating_set",
      [](const Graph& g, const std::vector<int>& vs) {
        return is_dominating_set(g, set_from(g, vs));
      },
      py::arg("graph"), py::arg("vertices"));
  m.def("domination_number", &domination_number, py::arg("graph"));
  m.def(
      "minimum_dominating_set",
      [](const Graph& g) { return minimum_dominating_set(g).vertices(); }, py::arg("graph"),
      "Lexicographically least dominating set of minimum size.");

  // Coalitions and c-partitions.
  m.def(
      "is_coalition",
      [](const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
        return is_coalition(g, set_from(g, xs), set_from(g, ys));
      },
      py::arg("graph"), py::arg("x"), py::arg("y"));
  m.def(
      "check_partition",
      [](const Graph& g, const std::vector<std::vector<int>>& blocks) -> py::object {
        const auto cert = is_c_partition(g, partition_from(g, blocks));
        return cert ? json_to_py(cert->to_json()) : py::none();
      },
      py::arg("graph"), py::arg("blocks"),
      "Certificate dict if the blocks form a c-partition, else None.");
  m.def(
      "is_minimal_c_partition",
      [](const Graph& g, const std::vector<std::vector<int>>& blocks) {
        return is_minimal_c_partition(g, partition_from(g, blocks));
      },
      py::arg("graph"), py::arg("blocks"));

  m.def(
      "cmin",
      [](const Graph& g, const std::string& method) {
        CminResult r = [&] {
          py::gil_scoped_release release;
          return cmin_with_method(g, method);
        }();
        return result_to_py(r);
      },
      py::arg("graph"), py::arg("method") = "auto",
      "Minimum c-partition order with certificate; method auto|brute|fast.");
  m.def(
      "coalition_number",
      [](const Graph& g) {
        CminResult r = [&] {
          py::gil_scoped_release release;
          return coalition_number_bruteforce(g);
        }();
        return result_to_py(r);
      },
      py::arg("graph"), "Maximum c-partition order with certificate.");

  // Fast predicates.
  m.def(
      "witness_cmin_two",
      [](const Graph& g) -> std::optional<int> { return test_cmin_eq_2(g); }, py::arg("graph"),
      "Vertex whose closed neighborhood is non-dominating, or None.");
  m.def("cmin_at_least_three", &test_cmin_ge_3, py::arg("graph"));
  m.def("cmin_at_least_four", &test_cmin_ge_4, py::arg("graph"),
        py::arg("degree_cap") = kDefaultDegreeCap);
  m.def("star_property", &property_star, py::arg("graph"),
        "Every vertex has a non-neighbor, and non-adjacent pairs dominate together.");

  // Family recognizers.
  m.def(
      "family_m_derivation",
      [](const Graph& g) -> py::object {
        const auto d = is_family_M(g);
        return d ? json_to_py(d->to_json()) : py::none();
      },
      py::arg("graph"), "Join derivation dict if the graph is in the join-closure family.");
  m.def(
      "family_f_witness",
      [](const Graph& g) -> py::object {
        const auto w = is_family_F(g);
        return w ? json_to_py(w->to_json()) : py::none();
      },
      py::arg("graph"), "Apex/hubs/core witness dict for the degree-2 family, or None.");

  // Closed forms.
  m.def("cycle_value", &cmin_formula_cycle, py::arg("order"));
  m.def("tree_value", &cmin_formula_tree, py::arg("tree"));

  // Verification harness.
  m.def("suites", [] { return suite_names(); });
  m.def(
      "verify",
      [](const std::string& suite, const std::string& corpus, int jobs) {
        VerificationReport rep = [&] {
          py::gil_scoped_release release;
          return run_verification(suite_from_name(suite), parse_corpus(corpus), jobs);
        }();
        return json_to_py(rep.to_json());
      },
      py::arg("suite"), py::arg("corpus"), py::arg("jobs") = 1,
      "Run a named check suite over a corpus spec (e.g. 'labeled:n<=4:connected').");

  m.attr("MAX_ORDER") = kMaxOrder;
}
