#include "rigidlink/report_json.hpp"

namespace rigidlink {

using nlohmann::json;

json graph_json(const Graph& g) {
    json out;
    out["n"] = g.vertex_count();
    out["edges"] = edges_json(g.edges());
    if (!g.labels().empty()) {
        json labels = json::object();
        for (const auto& [v, label] : g.labels()) labels[std::to_string(v)] = label;
        out["labels"] = labels;
    }
    return out;
}

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const auto& [u, v] : edges) out.push_back({u, v});
    return out;
}

json rigidity_verdict_json(const GlobalRigidityVerdict& verdict) {
    json out;
    out["globally_rigid"] = verdict.globally_rigid;
    if (!verdict.globally_rigid) {
        json witness;
        witness["kind"] = to_string(verdict.failure);
        if (verdict.failure == RigidityFailure::NotThreeConnected)
            witness["cut_set"] = verdict.cut_set;
        if (verdict.bridge)
            witness["bridge"] = {verdict.bridge->first, verdict.bridge->second};
        out["witness"] = witness;
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json three_block_json(const ThreeBlock& block) {
    json out;
    out["graph"] = graph_json(block.block);
    out["to_parent"] = block.to_parent;
    out["added_edges"] = edges_json(block.added_edges);
    out["u"] = block.u;
    out["v"] = block.v;
    return out;
}

json circuit_json(const Circuit& circuit) {
    json out;
    out["vertices"] = circuit.vertices;
    out["edges"] = edges_json(circuit.edges);
    return out;
}

json classification_json(const PairClassification& pc) {
    json out;
    out["u"] = pc.u;
    out["v"] = pc.v;
    out["verdict"] = to_string(pc.verdict);
    out["reason"] = to_string(pc.reason);
    if (pc.certificate) {
        const PairCertificate& cert = *pc.certificate;
        json payload;
        if (!cert.block_vertices.empty()) payload["block_vertices"] = cert.block_vertices;
        if (cert.kappa) payload["kappa"] = *cert.kappa;
        if (cert.kappa_cut) payload["kappa_cut"] = *cert.kappa_cut;
        if (cert.separating_pair)
            payload["separating_pair"] = {cert.separating_pair->a, cert.separating_pair->b};
        if (cert.three_block) payload["three_block"] = three_block_json(*cert.three_block);
        if (!cert.circuit_vertices.empty()) payload["circuit_vertices"] = cert.circuit_vertices;
        if (cert.clique_of_block) {
            payload["clique_graph"] = graph_json(cert.clique_of_block->graph);
            payload["clique_to_parent"] = cert.clique_of_block->to_parent;
        }
        if (cert.clique_verdict)
            payload["clique_verdict"] = rigidity_verdict_json(*cert.clique_verdict);
        out["certificate"] = payload;
    } else {
        out["certificate"] = nullptr;
    }
    return out;
}

json oracle_report_json(const RankOracleReport& report) {
    json out;
    out["rank"] = report.rank;
    out["modulus"] = report.modulus;
    out["seed"] = report.seed;
    out["repetitions"] = report.repetitions;
    return out;
}

json realization_json(const Realization& realization) {
    json out;
    out["dim"] = realization.dim;
    out["coords"] = realization.coords;
    return out;
}

json witness_json(const EquivalenceWitness& witness) {
    json out;
    out["p"] = realization_json(witness.p);
    out["q"] = realization_json(witness.q);
    out["residual"] = witness.residual;
    out["distance_gap"] = witness.distance_gap;
    out["trial"] = witness.trial;
    return out;
}

json mgr_audit_json(const MgrAuditReport& report) {
    json out;
    out["rigidity"] = rigidity_verdict_json(report.rigidity);
    out["applicable"] = report.applicable;
    out["minimal"] = report.minimal;
    if (report.removable_edge)
        out["removable_edge"] = {report.removable_edge->first, report.removable_edge->second};
    if (!report.applicable) return out;
    if (!report.minimal) return out;
    out["edge_bound_ok"] = report.edge_bound_ok;
    json checks = json::array();
    for (const SubsetSparsityCheck& check : report.checks) {
        json item;
        item["subset"] = check.subset;
        item["induced_edges"] = check.induced_edges;
        item["bound"] = check.bound;
        item["bound_ok"] = check.bound_ok;
        item["sum_formula_ok"] = check.sum_formula_ok;
        checks.push_back(item);
    }
    out["checks"] = checks;
    out["violations"] = report.violations;
    out["all_ok"] = report.all_ok;
    return out;
}

}  // namespace rigidlink
