#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidlink/errors.hpp"

namespace rigidlink {

/// Unordered vertex pair, stored normalized with first < second.
using Edge = std::pair<int, int>;

/// Sorted sequence of distinct vertex ids.
using VertexSet = std::vector<int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph with dense vertex ids 0..n-1 and an optional
/// side map of external string labels. Immutable after construction:
/// every structural operation returns a new graph.
class Graph {
public:
    Graph() = default;

    /// Throws PreconditionError on out-of-range ids, self-loops or
    /// duplicate edges. Edges are normalized and stored sorted.
    Graph(int n, std::vector<Edge> edges, std::map<int, std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges sorted lexicographically, each with first < second.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sorted neighbor list of v.
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adjacency_[static_cast<size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const;

    const std::map<int, std::string>& labels() const { return labels_; }

    /// Resolves an external label back to a vertex id.
    std::optional<int> vertex_by_label(const std::string& label) const;

    /// G + uv (no-op if present is an error: the pair must be non-adjacent).
    Graph with_edge(int u, int v) const;

    /// G - uv; the edge must exist.
    Graph without_edge(int u, int v) const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw PreconditionError("vertex id " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_ && labels_ == other.labels_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::map<int, std::string> labels_;
};

/// Validates the given ids against g and returns them sorted and unique.
/// Empty input is rejected when `allow_empty` is false.
VertexSet normalize_vertex_set(const Graph& g, VertexSet members, bool allow_empty = false);

/// A graph derived by selecting a vertex subset: to_parent[new_id] = old id.
struct MappedGraph {
    Graph graph;
    std::vector<int> to_parent;
};

/// A graph derived by merging vertices: old_to_new[old_id] = new id.
struct ContractedGraph {
    Graph graph;
    std::vector<int> old_to_new;
};

/// G[X] with ids re-densified in increasing order of the original ids.
MappedGraph induced_subgraph(const Graph& g, const VertexSet& x);

/// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// N_G(S): vertices outside S with a neighbor in S.
VertexSet neighbors_of_set(const Graph& g, const VertexSet& s);

/// G/S: S merged into a single vertex (the smallest id of S), loops and
/// parallel edges removed, ids re-densified.
ContractedGraph contract_set(const Graph& g, const VertexSet& s);

/// G/e for e = uv in E.
ContractedGraph contract_edge(const Graph& g, int u, int v);

/// Clique(G,X): delete every component of G-X and complete the
/// neighborhood of each deleted component. Vertex set of the result is X.
MappedGraph clique_graph(const Graph& g, const VertexSet& x);

/// Con(G,X): contract every component of G-X to a single vertex.
ContractedGraph con_graph(const Graph& g, const VertexSet& x);

/// Glues g2 onto g1 along a clique: identification maps a clique of g1
/// bijectively onto a clique of g2 (pairs are (vertex in g1, vertex in g2)).
/// Vertices of g1 keep their ids; unidentified vertices of g2 follow.
Graph clique_sum(const Graph& g1, const Graph& g2,
                 const std::vector<std::pair<int, int>>& identification);

/// Checks all Graph invariants explicitly (used by tests as a validator;
/// constructors enforce the same conditions).
bool validate_graph(const Graph& g);

}  // namespace rigidlink
