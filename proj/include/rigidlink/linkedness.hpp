#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rigidlink/connectivity.hpp"
#include "rigidlink/graph.hpp"
#include "rigidlink/pebble.hpp"

namespace rigidlink {

enum class Verdict { Adjacent, GloballyLoose, WeaklyGloballyLinked };

enum class PairReason {
    AdjacentEdge,
    NotLinked,
    KappaAtMostTwo,
    SeparatingPair,
    CliqueOfThreeBlockGloballyRigid,
    CliqueOfThreeBlockNotGloballyRigid,
};

const char* to_string(Verdict v);
const char* to_string(PairReason r);

enum class RigidityFailure {
    None,
    TooSmallNotComplete,
    NotThreeConnected,
    NotRigid,
    NotRedundantlyRigid,
};

const char* to_string(RigidityFailure f);

struct GlobalRigidityVerdict {
    bool globally_rigid = false;
    RigidityFailure failure = RigidityFailure::None;
    VertexSet cut_set;           // NotThreeConnected: a separating set (size 0, 1 or 2)
    std::optional<Edge> bridge;  // NotRedundantlyRigid: an edge whose removal breaks rigidity
};

/// Globally rigid in the plane: for |V| >= 4, 3-connected and redundantly
/// rigid; for |V| <= 3, complete. Carries a failure witness otherwise.
GlobalRigidityVerdict is_globally_rigid2(const Graph& g);

/// Everything needed to replay a pair decision. Vertex ids in the payload
/// graphs are local; the to_parent vectors map them back to the input graph.
struct PairCertificate {
    VertexSet block_vertices;                      // 2-connected block of the pair
    std::optional<int> kappa;                      // reason KappaAtMostTwo: the exact kappa
    std::optional<VertexSet> kappa_cut;            // and a minimum vertex cut witnessing it
    std::optional<SeparatorPair> separating_pair;  // reason SeparatingPair (input ids)
    std::optional<ThreeBlock> three_block;         // to_parent rebased to input ids
    VertexSet circuit_vertices;                    // V0 in input ids
    std::optional<MappedGraph> clique_of_block;    // Clique(B, V0); to_parent in input ids
    std::optional<GlobalRigidityVerdict> clique_verdict;
};

struct PairClassification {
    int u = -1;
    int v = -1;
    Verdict verdict = Verdict::GloballyLoose;
    PairReason reason = PairReason::NotLinked;
    std::optional<PairCertificate> certificate;
};

/// Classifies one vertex pair as adjacent, weakly globally linked, or
/// globally loose, with the reason and an optional replayable certificate.
PairClassification classify_pair(const Graph& g, int u, int v, bool with_certificate = true);

/// classify_pair over all non-adjacent pairs, in lexicographic pair order.
/// Workers share nothing; results do not depend on the thread count.
std::vector<PairClassification> classify_all_pairs(const Graph& g, int threads = 1,
                                                   bool with_certificate = false);

/// J2(G): the non-adjacent weakly globally linked pairs.
std::vector<Edge> weakly_linked_pairs(const Graph& g, int threads = 1);

/// Sufficient condition for weak global linkedness: with G 3-connected and
/// G[X] a (u,v)-rigid induced subgraph, a globally rigid Clique(G,X) forces
/// the verdict WeaklyGloballyLinked. Throws when the hypotheses fail,
/// distinguishing "not 3-connected" from "X not (u,v)-rigid".
bool sufficient_condition_wgl(const Graph& g, int u, int v, const VertexSet& x);

struct SubsetSparsityCheck {
    VertexSet subset;         // isolated vertices of G[U] removed
    int induced_edges = 0;
    int bound = 0;            // 3|U|-6 for |U| >= 3, else 1
    bool bound_ok = false;
    bool sum_formula_ok = false;  // sum(2|Vi|-3) over maximal rigid subgraphs == r2(G[U])
};

struct MgrAuditReport {
    GlobalRigidityVerdict rigidity;
    bool applicable = false;  // input is globally rigid
    bool minimal = false;     // and no single edge can be dropped
    std::optional<Edge> removable_edge;
    bool edge_bound_ok = false;  // |E| <= 3|V|-6
    std::vector<SubsetSparsityCheck> checks;
    std::vector<VertexSet> violations;  // subsets that broke a bound
    bool all_ok = false;
};

/// Audits minimal global rigidity: reports whether G is minimally globally
/// rigid and, when it is, verifies the edge-count bound on the whole graph,
/// on every maximal-rigid-subgraph vertex set, and on sampled subsets.
MgrAuditReport audit_minimally_globally_rigid(const Graph& g, int sampled_subsets = 20,
                                              uint64_t seed = 0x5eed2d11);

}  // namespace rigidlink
