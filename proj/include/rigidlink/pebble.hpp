#pragma once

#include <vector>

#include "rigidlink/graph.hpp"

namespace rigidlink {

/// Incremental (2,3)-pebble game over a fixed vertex set. Maintains an
/// orientation of the accepted (independent) edges in which
/// pebbles(v) + outdeg(v) == 2 for every vertex. The accepted set is a
/// basis of the 2-dimensional rigidity matroid of the inserted edges.
///
/// Gather-only queries (would_increase_rank, fundamental_span) move pebbles
/// around but never change the accepted set, so a single instance can serve
/// any number of queries after the graph has been played.
class PebbleGame {
public:
    explicit PebbleGame(int vertex_count);

    /// Plays every edge of g in canonical (sorted) order.
    static PebbleGame play(const Graph& g);

    /// Inserts uv if independent of the accepted set; returns whether it
    /// was accepted.
    bool try_insert(int u, int v);

    /// True iff adding uv would increase the rank, i.e. the pair {u,v} is
    /// not linked w.r.t. the accepted set.
    bool would_increase_rank(int u, int v);

    /// Vertex span of the fundamental circuit of uv w.r.t. the accepted
    /// basis. Requires would_increase_rank(u,v) == false.
    VertexSet fundamental_span(int u, int v);

    /// Accepted edges with both endpoints inside `span`, i.e. the circuit
    /// edges B0 for a span returned by fundamental_span.
    std::vector<Edge> accepted_inside(const VertexSet& span) const;

    int rank() const { return rank_; }
    const std::vector<Edge>& accepted() const { return accepted_; }
    int vertex_count() const { return static_cast<int>(pebbles_.size()); }

private:
    // Moves one pebble to `root` along a reversed path, never taking the
    // pebble sitting on `protect`. Returns false when none is reachable.
    bool find_pebble(int root, int protect);
    // Raises pebbles(u)+pebbles(v) as high as possible (capped at 4).
    int gather(int u, int v);

    std::vector<std::vector<int>> out_;
    std::vector<int> pebbles_;
    std::vector<Edge> accepted_;
    int rank_ = 0;

    // scratch
    std::vector<int> stamp_;
    std::vector<int> parent_;
    std::vector<int> queue_;
    int clock_ = 0;
};

/// Rank of the 2-dimensional rigidity matroid of G.
int rank2(const Graph& g);

/// Gluck's criterion at d = 2: rank == 2|V|-3, with complete graphs on
/// at most 2 vertices rigid by convention.
bool is_rigid2(const Graph& g);

/// True iff adding the non-adjacent pair uv leaves the rank unchanged.
bool is_linked2(const Graph& g, int u, int v);

struct Circuit {
    VertexSet vertices;
    std::vector<Edge> edges;  // includes uv; the rest lies in G
};

/// The fundamental circuit of uv w.r.t. the canonical pebble-game basis:
/// a circuit of G+uv containing uv. Requires uv not in E and {u,v} linked.
Circuit fundamental_circuit(const Graph& g, int u, int v);

/// Edges contained in no circuit of G (their deletion drops the rank).
std::vector<Edge> r2_bridges(const Graph& g);

/// Partition of E into connected components of the rigidity matroid,
/// each sorted, ordered by their smallest edge.
std::vector<std::vector<Edge>> r2_components(const Graph& g);

/// Rigid, and still rigid after deleting any single edge. Requires at
/// least three edges.
bool is_redundantly_rigid2(const Graph& g);

/// Vertex sets of the maximal rigid subgraphs of G. Every edge belongs to
/// exactly one; distinct sets share at most one vertex. Requires a graph
/// without isolated vertices.
std::vector<VertexSet> maximal_rigid_subgraphs(const Graph& g);

}  // namespace rigidlink
