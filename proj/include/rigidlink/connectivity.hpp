#pragma once

#include <optional>
#include <vector>

#include "rigidlink/graph.hpp"

namespace rigidlink {

/// Maximum number of internally disjoint u-v paths (Menger), computed by
/// unit-vertex-capacity max-flow. Requires a non-adjacent pair. When
/// stop_at > 0 the search stops early and returns min(kappa, stop_at).
int kappa_pair(const Graph& g, int u, int v, int stop_at = 0);

/// kappa plus a minimum vertex cut witnessing it (empty when the pair is
/// disconnected). The cut is read off the final max-flow residual graph.
std::pair<int, VertexSet> kappa_pair_with_cut(const Graph& g, int u, int v);

/// Standard k-connectivity for k in {1,2,3}; |V| > k is required.
bool is_k_connected(const Graph& g, int k);

/// A pair whose removal disconnects a 2-connected graph.
struct SeparatorPair {
    int a = -1;
    int b = -1;

    bool operator==(const SeparatorPair& other) const { return a == other.a && b == other.b; }
};

/// All 2-separators of a 2-connected graph on at least 4 vertices, as
/// normalized (a < b) pairs in lexicographic order.
std::vector<SeparatorPair> two_separators(const Graph& g);

/// The graph plus an edge ab for every non-adjacent 2-separator (a,b).
/// Requires a 2-connected input.
Graph augmented_graph(const Graph& g);

/// Cleaving along (a,b) toward component C of G-{a,b}: G[C + {a,b}] plus
/// the edge ab when absent. C must be exactly a component of G-{a,b}.
MappedGraph cleave(const Graph& g, SeparatorPair s, const VertexSet& c);

/// The 3-block of a pair: a 3-connected graph reached from G by repeated
/// cleaving toward the side containing u and v.
struct ThreeBlock {
    Graph block;
    std::vector<int> to_parent;     // block id -> original id
    std::vector<Edge> added_edges;  // virtual edges of the block, block ids
    int u = -1;                     // the queried pair in block ids
    int v = -1;
};

struct ThreeBlockResult {
    bool separating_pair = false;  // (u,v) itself disconnects G
    std::optional<ThreeBlock> block;
};

/// Requires: G 2-connected, uv not in E, kappa(u,v) >= 3. Either reports
/// that (u,v) is a 2-separator of G, or extracts the unique 3-block
/// containing the pair (which never contains the edge uv).
ThreeBlockResult three_block(const Graph& g, int u, int v);

/// Vertex sets of the biconnected components (blocks); every edge lies in
/// exactly one block. Ordered by smallest member.
std::vector<VertexSet> biconnected_components(const Graph& g);

}  // namespace rigidlink
