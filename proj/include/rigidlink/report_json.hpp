#pragma once

#include <nlohmann/json.hpp>

#include "rigidlink/connectivity.hpp"
#include "rigidlink/graph.hpp"
#include "rigidlink/linkedness.hpp"
#include "rigidlink/oracle.hpp"
#include "rigidlink/pebble.hpp"

namespace rigidlink {

nlohmann::json graph_json(const Graph& g);
nlohmann::json edges_json(const std::vector<Edge>& edges);
nlohmann::json rigidity_verdict_json(const GlobalRigidityVerdict& verdict);
nlohmann::json three_block_json(const ThreeBlock& block);
nlohmann::json circuit_json(const Circuit& circuit);
nlohmann::json classification_json(const PairClassification& pc);
nlohmann::json oracle_report_json(const RankOracleReport& report);
nlohmann::json realization_json(const Realization& realization);
nlohmann::json witness_json(const EquivalenceWitness& witness);
nlohmann::json mgr_audit_json(const MgrAuditReport& report);

}  // namespace rigidlink
