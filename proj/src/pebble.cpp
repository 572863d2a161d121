#include "rigidlink/pebble.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rigidlink {

PebbleGame::PebbleGame(int vertex_count)
    : out_(static_cast<size_t>(vertex_count)),
      pebbles_(static_cast<size_t>(vertex_count), 2),
      stamp_(static_cast<size_t>(vertex_count), 0),
      parent_(static_cast<size_t>(vertex_count), -1) {
    for (auto& o : out_) o.reserve(2);
}

PebbleGame PebbleGame::play(const Graph& g) {
    PebbleGame game(g.vertex_count());
    for (const auto& [u, v] : g.edges()) game.try_insert(u, v);
    return game;
}

bool PebbleGame::find_pebble(int root, int protect) {
    ++clock_;
    stamp_[static_cast<size_t>(root)] = clock_;
    queue_.clear();
    queue_.push_back(root);
    for (size_t head = 0; head < queue_.size(); ++head) {
        int v = queue_[head];
        for (int w : out_[static_cast<size_t>(v)]) {
            if (stamp_[static_cast<size_t>(w)] == clock_) continue;
            stamp_[static_cast<size_t>(w)] = clock_;
            parent_[static_cast<size_t>(w)] = v;
            if (w != protect && pebbles_[static_cast<size_t>(w)] > 0) {
                // Reverse the root -> w path; the pebble travels to root.
                int cur = w;
                while (cur != root) {
                    int prev = parent_[static_cast<size_t>(cur)];
                    auto& po = out_[static_cast<size_t>(prev)];
                    po.erase(std::find(po.begin(), po.end(), cur));
                    out_[static_cast<size_t>(cur)].push_back(prev);
                    cur = prev;
                }
                --pebbles_[static_cast<size_t>(w)];
                ++pebbles_[static_cast<size_t>(root)];
                return true;
            }
            queue_.push_back(w);
        }
    }
    return false;
}

int PebbleGame::gather(int u, int v) {
    while (pebbles_[static_cast<size_t>(u)] + pebbles_[static_cast<size_t>(v)] < 4) {
        if (pebbles_[static_cast<size_t>(u)] < 2 && find_pebble(u, v)) continue;
        if (pebbles_[static_cast<size_t>(v)] < 2 && find_pebble(v, u)) continue;
        break;
    }
    return pebbles_[static_cast<size_t>(u)] + pebbles_[static_cast<size_t>(v)];
}

bool PebbleGame::try_insert(int u, int v) {
    if (u == v) throw PreconditionError("pebble game rejects self-loops");
    if (gather(u, v) < 4) return false;
    out_[static_cast<size_t>(u)].push_back(v);
    --pebbles_[static_cast<size_t>(u)];
    accepted_.push_back(make_edge(u, v));
    ++rank_;
    return true;
}

bool PebbleGame::would_increase_rank(int u, int v) {
    if (u == v) throw PreconditionError("pair must be two distinct vertices");
    return gather(u, v) == 4;
}

VertexSet PebbleGame::fundamental_span(int u, int v) {
    int total = gather(u, v);
    if (total == 4) throw PreconditionError("pair is independent: no fundamental circuit");
    if (total != 3)
        throw PreconditionError("pebble invariant violated: gathered " + std::to_string(total) +
                                " pebbles on a dependent pair");

    // The reachable set of {u,v} in the failed state spans the circuit.
    ++clock_;
    queue_.clear();
    stamp_[static_cast<size_t>(u)] = clock_;
    queue_.push_back(u);
    if (stamp_[static_cast<size_t>(v)] != clock_) {
        stamp_[static_cast<size_t>(v)] = clock_;
        queue_.push_back(v);
    }
    for (size_t head = 0; head < queue_.size(); ++head) {
        for (int w : out_[static_cast<size_t>(queue_[head])]) {
            if (stamp_[static_cast<size_t>(w)] != clock_) {
                stamp_[static_cast<size_t>(w)] = clock_;
                queue_.push_back(w);
            }
        }
    }
    VertexSet span = queue_;
    std::sort(span.begin(), span.end());
    return span;
}

std::vector<Edge> PebbleGame::accepted_inside(const VertexSet& span) const {
    std::vector<Edge> inside;
    for (const auto& [a, b] : accepted_)
        if (std::binary_search(span.begin(), span.end(), a) &&
            std::binary_search(span.begin(), span.end(), b))
            inside.push_back({a, b});
    std::sort(inside.begin(), inside.end());
    return inside;
}

int rank2(const Graph& g) { return PebbleGame::play(g).rank(); }

bool is_rigid2(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    if (n == 2) return g.edge_count() == 1;
    return rank2(g) == 2 * n - 3;
}

bool is_linked2(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw PreconditionError("pair must be two distinct vertices");
    if (g.has_edge(u, v)) throw PreconditionError("is_linked2 requires a non-adjacent pair");
    PebbleGame game = PebbleGame::play(g);
    return !game.would_increase_rank(u, v);
}

Circuit fundamental_circuit(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw PreconditionError("pair must be two distinct vertices");
    if (g.has_edge(u, v)) throw PreconditionError("fundamental_circuit requires a non-adjacent pair");
    PebbleGame game = PebbleGame::play(g);
    if (game.would_increase_rank(u, v))
        throw PreconditionError("pair (" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not linked: no circuit through it");
    Circuit circuit;
    circuit.vertices = game.fundamental_span(u, v);
    circuit.edges = game.accepted_inside(circuit.vertices);
    circuit.edges.push_back(make_edge(u, v));
    std::sort(circuit.edges.begin(), circuit.edges.end());
    if (circuit.edges.size() != 2 * circuit.vertices.size() - 2)
        throw PreconditionError("circuit extraction lost the edge-count invariant");
    return circuit;
}

namespace {

struct EdgeUnionFind {
    std::vector<int> parent;

    explicit EdgeUnionFind(size_t size) : parent(size) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

int edge_index(const Graph& g, const Edge& e) {
    const auto& edges = g.edges();
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
}

// Union of each dependent edge with its fundamental circuit w.r.t. the
// canonical basis; the resulting classes are the matroid components.
EdgeUnionFind circuit_components(const Graph& g, PebbleGame& game) {
    EdgeUnionFind dsu(g.edges().size());
    std::vector<char> in_basis(g.edges().size(), 0);
    for (const auto& e : game.accepted()) in_basis[static_cast<size_t>(edge_index(g, e))] = 1;

    for (size_t i = 0; i < g.edges().size(); ++i) {
        if (in_basis[i]) continue;
        const auto& [u, v] = g.edges()[i];
        VertexSet span = game.fundamental_span(u, v);
        for (const Edge& inside : game.accepted_inside(span))
            dsu.unite(static_cast<int>(i), edge_index(g, inside));
    }
    return dsu;
}

}  // namespace

std::vector<std::vector<Edge>> r2_components(const Graph& g) {
    PebbleGame game = PebbleGame::play(g);
    EdgeUnionFind dsu = circuit_components(g, game);

    std::map<int, std::vector<Edge>> classes;
    for (size_t i = 0; i < g.edges().size(); ++i)
        classes[dsu.find(static_cast<int>(i))].push_back(g.edges()[i]);

    std::vector<std::vector<Edge>> out;
    out.reserve(classes.size());
    for (auto& [root, edges] : classes) out.push_back(std::move(edges));
    return out;
}

std::vector<Edge> r2_bridges(const Graph& g) {
    PebbleGame game = PebbleGame::play(g);
    std::vector<char> in_circuit(g.edges().size(), 0);
    std::vector<char> in_basis(g.edges().size(), 0);
    for (const auto& e : game.accepted()) in_basis[static_cast<size_t>(edge_index(g, e))] = 1;

    for (size_t i = 0; i < g.edges().size(); ++i) {
        if (in_basis[i]) continue;
        const auto& [u, v] = g.edges()[i];
        in_circuit[i] = 1;
        VertexSet span = game.fundamental_span(u, v);
        for (const Edge& inside : game.accepted_inside(span))
            in_circuit[static_cast<size_t>(edge_index(g, inside))] = 1;
    }

    std::vector<Edge> bridges;
    for (size_t i = 0; i < g.edges().size(); ++i)
        if (!in_circuit[i]) bridges.push_back(g.edges()[i]);
    return bridges;
}

bool is_redundantly_rigid2(const Graph& g) {
    if (g.edge_count() < 3)
        throw PreconditionError("redundant rigidity requires at least three edges");
    return is_rigid2(g) && r2_bridges(g).empty();
}

std::vector<VertexSet> maximal_rigid_subgraphs(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw PreconditionError("maximal_rigid_subgraphs requires no isolated vertices");

    PebbleGame game = PebbleGame::play(g);
    EdgeUnionFind dsu(g.edges().size());

    // Two edges sharing vertex v lie in a common rigid subgraph iff their
    // far endpoints are adjacent or linked.
    std::map<Edge, bool> linked_cache;
    auto far_pair_rigid = [&](int x, int y) {
        if (g.has_edge(x, y)) return true;
        Edge key = make_edge(x, y);
        auto it = linked_cache.find(key);
        if (it != linked_cache.end()) return it->second;
        bool linked = !game.would_increase_rank(x, y);
        linked_cache.emplace(key, linked);
        return linked;
    };

    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (far_pair_rigid(nb[i], nb[j]))
                    dsu.unite(edge_index(g, make_edge(v, nb[i])),
                              edge_index(g, make_edge(v, nb[j])));
    }

    std::map<int, VertexSet> classes;
    for (size_t i = 0; i < g.edges().size(); ++i) {
        auto& vs = classes[dsu.find(static_cast<int>(i))];
        vs.push_back(g.edges()[i].first);
        vs.push_back(g.edges()[i].second);
    }
    std::vector<VertexSet> out;
    out.reserve(classes.size());
    for (auto& [root, vs] : classes) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        out.push_back(std::move(vs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rigidlink
