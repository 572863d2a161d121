#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "rigidlink/connectivity.hpp"
#include "rigidlink/graph_io.hpp"
#include "rigidlink/linkedness.hpp"
#include "rigidlink/oracle.hpp"
#include "rigidlink/pebble.hpp"
#include "rigidlink/report_json.hpp"

namespace py = pybind11;
using namespace rigidlink;
using nlohmann::json;

namespace {

py::object json_to_py(const json& value) {
    switch (value.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(value.get<bool>());
        case json::value_t::number_integer: return py::int_(value.get<long long>());
        case json::value_t::number_unsigned: return py::int_(value.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(value.get<double>());
        case json::value_t::string: return py::str(value.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : value) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [key, item] : value.items()) out[py::str(key)] = json_to_py(item);
            return out;
        }
        default: return py::none();
    }
}

GraphFormat format_from_string(const std::string& name) {
    if (name == "edge-list") return GraphFormat::EdgeList;
    if (name == "json") return GraphFormat::Json;
    throw PreconditionError("format must be \"edge-list\" or \"json\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Combinatorial rigidity in the plane: rank, global rigidity, and "
              "weakly globally linked pairs, with a numeric rank oracle.";

    py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges,
                         const std::map<int, std::string>& labels) {
                 std::vector<Edge> normalized;
                 normalized.reserve(edges.size());
                 for (const auto& [u, v] : edges) normalized.push_back(make_edge(u, v));
                 return Graph(n, std::move(normalized), labels);
             }),
             py::arg("n"), py::arg("edges"), py::arg("labels") = std::map<int, std::string>{})
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); }, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("labels", [](const Graph& g) { return g.labels(); })
        .def("vertex_by_label", &Graph::vertex_by_label, py::arg("label"))
        .def("with_edge", &Graph::with_edge, py::arg("u"), py::arg("v"))
        .def("without_edge", &Graph::without_edge, py::arg("u"), py::arg("v"))
        .def("digest", &graph_digest)
        .def("dumps",
             [](const Graph& g, const std::string& format) {
                 return serialize_graph(g, format_from_string(format));
             },
             py::arg("format") = "json")
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("loads",
          [](const std::string& text, const std::string& format) {
              if (format == "auto") return parse_graph_auto(text);
              return parse_graph(text, format_from_string(format));
          },
          py::arg("text"), py::arg("format") = "auto",
          "Parse a graph from edge-list or JSON text.");

    // graph constructions
    m.def("components", &components, py::arg("g"));
    m.def("neighbors_of_set", &neighbors_of_set, py::arg("g"), py::arg("s"));
    m.def("induced_subgraph",
          [](const Graph& g, const VertexSet& x) {
              MappedGraph out = induced_subgraph(g, x);
              return py::make_tuple(out.graph, out.to_parent);
          },
          py::arg("g"), py::arg("x"), "Returns (graph, to_parent).");
    m.def("contract_set",
          [](const Graph& g, const VertexSet& s) {
              ContractedGraph out = contract_set(g, s);
              return py::make_tuple(out.graph, out.old_to_new);
          },
          py::arg("g"), py::arg("s"), "Returns (graph, old_to_new).");
    m.def("contract_edge",
          [](const Graph& g, int u, int v) {
              ContractedGraph out = contract_edge(g, u, v);
              return py::make_tuple(out.graph, out.old_to_new);
          },
          py::arg("g"), py::arg("u"), py::arg("v"));
    m.def("clique_graph",
          [](const Graph& g, const VertexSet& x) {
              MappedGraph out = clique_graph(g, x);
              return py::make_tuple(out.graph, out.to_parent);
          },
          py::arg("g"), py::arg("x"), "Clique(G,X) and its vertex map.");
    m.def("con_graph",
          [](const Graph& g, const VertexSet& x) {
              ContractedGraph out = con_graph(g, x);
              return py::make_tuple(out.graph, out.old_to_new);
          },
          py::arg("g"), py::arg("x"), "Con(G,X) and its vertex map.");
    m.def("clique_sum", &clique_sum, py::arg("g1"), py::arg("g2"), py::arg("identification"));

    // connectivity
    m.def("kappa_pair", &kappa_pair, py::arg("g"), py::arg("u"), py::arg("v"),
          py::arg("stop_at") = 0);
    m.def("kappa_pair_with_cut", &kappa_pair_with_cut, py::arg("g"), py::arg("u"), py::arg("v"));
    m.def("is_k_connected", &is_k_connected, py::arg("g"), py::arg("k"));
    m.def("two_separators",
          [](const Graph& g) {
              std::vector<std::pair<int, int>> out;
              for (const SeparatorPair& s : two_separators(g)) out.emplace_back(s.a, s.b);
              return out;
          },
          py::arg("g"));
    m.def("augmented_graph", &augmented_graph, py::arg("g"));
    m.def("cleave",
          [](const Graph& g, std::pair<int, int> s, const VertexSet& c) {
              MappedGraph out = cleave(g, SeparatorPair{s.first, s.second}, c);
              return py::make_tuple(out.graph, out.to_parent);
          },
          py::arg("g"), py::arg("separator"), py::arg("component"));
    m.def("three_block",
          [](const Graph& g, int u, int v) {
              ThreeBlockResult r = three_block(g, u, v);
              json out;
              out["separating_pair"] = r.separating_pair;
              out["block"] = r.block ? three_block_json(*r.block) : json(nullptr);
              return json_to_py(out);
          },
          py::arg("g"), py::arg("u"), py::arg("v"));
    m.def("biconnected_components", &biconnected_components, py::arg("g"));

    // rigidity matroid
    m.def("rank2", &rank2, py::arg("g"));
    m.def("is_rigid2", &is_rigid2, py::arg("g"));
    m.def("is_linked2", &is_linked2, py::arg("g"), py::arg("u"), py::arg("v"));
    m.def("fundamental_circuit",
          [](const Graph& g, int u, int v) {
              return json_to_py(circuit_json(fundamental_circuit(g, u, v)));
          },
          py::arg("g"), py::arg("u"), py::arg("v"));
    m.def("r2_bridges", &r2_bridges, py::arg("g"));
    m.def("r2_components", &r2_components, py::arg("g"));
    m.def("is_redundantly_rigid2", &is_redundantly_rigid2, py::arg("g"));
    m.def("maximal_rigid_subgraphs", &maximal_rigid_subgraphs, py::arg("g"));

    // linkedness decisions
    m.def("is_globally_rigid2",
          [](const Graph& g) { return json_to_py(rigidity_verdict_json(is_globally_rigid2(g))); },
          py::arg("g"));
    m.def("classify_pair",
          [](const Graph& g, int u, int v, bool certificate) {
              return json_to_py(classification_json(classify_pair(g, u, v, certificate)));
          },
          py::arg("g"), py::arg("u"), py::arg("v"), py::arg("certificate") = true);
    m.def("classify_all_pairs",
          [](const Graph& g, int threads, bool certificate) {
              py::list out;
              for (const PairClassification& pc : classify_all_pairs(g, threads, certificate))
                  out.append(json_to_py(classification_json(pc)));
              return out;
          },
          py::arg("g"), py::arg("threads") = 1, py::arg("certificate") = false);
    m.def("weakly_linked_pairs",
          [](const Graph& g, int threads) { return weakly_linked_pairs(g, threads); },
          py::arg("g"), py::arg("threads") = 1, "J2(G): the weakly globally linked pairs.");
    m.def("sufficient_condition_wgl", &sufficient_condition_wgl, py::arg("g"), py::arg("u"),
          py::arg("v"), py::arg("x"));
    m.def("audit_minimally_globally_rigid",
          [](const Graph& g, int samples, uint64_t seed) {
              return json_to_py(mgr_audit_json(audit_minimally_globally_rigid(g, samples, seed)));
          },
          py::arg("g"), py::arg("samples") = 20, py::arg("seed") = kDefaultOracleSeed);

    // numeric oracle
    m.def("rigidity_matrix",
          [](const Graph& g, int dim, const std::vector<double>& coords) {
              return rigidity_matrix(g, Realization{dim, coords});
          },
          py::arg("g"), py::arg("dim"), py::arg("coords"),
          "Rows in canonical edge order; coords flattened per vertex.");
    m.def("generic_rank",
          [](const Graph& g, int dim, uint64_t seed, int repetitions) {
              return json_to_py(oracle_report_json(generic_rank(g, dim, seed, repetitions)));
          },
          py::arg("g"), py::arg("dim") = 2, py::arg("seed") = kDefaultOracleSeed,
          py::arg("repetitions") = 2);
    m.def("generic_rank_float", &generic_rank_float, py::arg("g"), py::arg("dim") = 2,
          py::arg("seed") = kDefaultOracleSeed,
          "Double-precision elimination rank (debug route).");
    m.def("equivalence_sampler",
          [](const Graph& g, int u, int v, int dim, int trials, uint64_t seed) -> py::object {
              auto witness = equivalence_sampler(g, u, v, dim, trials, seed);
              if (!witness) return py::none();
              return json_to_py(witness_json(*witness));
          },
          py::arg("g"), py::arg("u"), py::arg("v"), py::arg("dim") = 2, py::arg("trials") = 100,
          py::arg("seed") = kDefaultOracleSeed);
}
