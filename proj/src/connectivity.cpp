#include "rigidlink/connectivity.hpp"

#include <algorithm>
#include <set>

namespace rigidlink {

namespace {

// Iterative Tarjan lowpoint pass with one vertex optionally removed.
// Works on a flat CSR snapshot of the adjacency and reuses its buffers, so
// sweeping the removed vertex over the whole graph stays cache-friendly.
class LowpointEngine {
public:
    explicit LowpointEngine(const Graph& g) : n_(g.vertex_count()) {
        offsets_.reserve(static_cast<size_t>(n_) + 1);
        offsets_.push_back(0);
        for (int v = 0; v < n_; ++v) {
            const auto& nb = g.neighbors(v);
            flat_.insert(flat_.end(), nb.begin(), nb.end());
            offsets_.push_back(static_cast<int>(flat_.size()));
        }
        articulation_.resize(static_cast<size_t>(n_));
        disc_.resize(static_cast<size_t>(n_));
        low_.resize(static_cast<size_t>(n_));
        parent_.resize(static_cast<size_t>(n_));
        iter_.resize(static_cast<size_t>(n_));
    }

    void run(int skip) {
        std::fill(articulation_.begin(), articulation_.end(), 0);
        std::fill(disc_.begin(), disc_.end(), -1);
        std::fill(parent_.begin(), parent_.end(), -1);
        stack_.clear();
        visited_ = 0;
        int root_children = 0;
        int clock = 0;

        int root = (skip == 0) ? 1 : 0;
        if (root >= n_) {
            connected_ = true;  // empty graph after removal
            return;
        }

        disc_[static_cast<size_t>(root)] = low_[static_cast<size_t>(root)] = clock++;
        iter_[static_cast<size_t>(root)] = offsets_[static_cast<size_t>(root)];
        stack_.push_back(root);
        ++visited_;
        while (!stack_.empty()) {
            int v = stack_.back();
            if (iter_[static_cast<size_t>(v)] < offsets_[static_cast<size_t>(v) + 1]) {
                int w = flat_[static_cast<size_t>(iter_[static_cast<size_t>(v)]++)];
                if (w == skip) continue;
                if (disc_[static_cast<size_t>(w)] < 0) {
                    parent_[static_cast<size_t>(w)] = v;
                    if (v == root) ++root_children;
                    disc_[static_cast<size_t>(w)] = low_[static_cast<size_t>(w)] = clock++;
                    iter_[static_cast<size_t>(w)] = offsets_[static_cast<size_t>(w)];
                    stack_.push_back(w);
                    ++visited_;
                } else if (w != parent_[static_cast<size_t>(v)]) {
                    low_[static_cast<size_t>(v)] =
                        std::min(low_[static_cast<size_t>(v)], disc_[static_cast<size_t>(w)]);
                }
            } else {
                stack_.pop_back();
                int p = parent_[static_cast<size_t>(v)];
                if (p >= 0) {
                    low_[static_cast<size_t>(p)] =
                        std::min(low_[static_cast<size_t>(p)], low_[static_cast<size_t>(v)]);
                    if (p != root && low_[static_cast<size_t>(v)] >= disc_[static_cast<size_t>(p)])
                        articulation_[static_cast<size_t>(p)] = 1;
                }
            }
        }
        if (root_children > 1) articulation_[static_cast<size_t>(root)] = 1;
        connected_ = (visited_ == (skip >= 0 && skip < n_ ? n_ - 1 : n_));
    }

    const std::vector<char>& articulation() const { return articulation_; }
    bool connected() const { return connected_; }
    bool has_articulation() const {
        return std::find(articulation_.begin(), articulation_.end(), 1) != articulation_.end();
    }

private:
    int n_;
    std::vector<int> offsets_, flat_;
    std::vector<char> articulation_;
    std::vector<int> disc_, low_, parent_, stack_, iter_;
    int visited_ = 0;
    bool connected_ = false;
};

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    LowpointEngine engine(g);
    engine.run(-1);
    return engine.connected();
}

}  // namespace

namespace {

// Split every vertex into in/out halves joined by a unit arc; each edge
// becomes a unit arc in both directions. Internally disjoint u-v paths
// are then exactly the augmenting paths from u_out to v_in.
struct VertexFlow {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;
    int source, sink;
    int flow = 0;

    VertexFlow(const Graph& g, int u, int v) : arcs(static_cast<size_t>(2 * g.vertex_count())) {
        auto add_arc = [&](int from, int to, int cap) {
            arcs[static_cast<size_t>(from)].push_back(
                {to, cap, static_cast<int>(arcs[static_cast<size_t>(to)].size())});
            arcs[static_cast<size_t>(to)].push_back(
                {from, 0, static_cast<int>(arcs[static_cast<size_t>(from)].size()) - 1});
        };
        // Unit capacity on the split arcs only; edge arcs are effectively
        // infinite so that every minimum cut consists of split arcs, i.e.
        // of vertices.
        int big = g.vertex_count() + 1;
        for (int w = 0; w < g.vertex_count(); ++w) add_arc(in_node(w), out_node(w), 1);
        for (const auto& [x, y] : g.edges()) {
            add_arc(out_node(x), in_node(y), big);
            add_arc(out_node(y), in_node(x), big);
        }
        source = out_node(u);
        sink = in_node(v);
    }

    static int in_node(int w) { return 2 * w; }
    static int out_node(int w) { return 2 * w + 1; }

    void run(int stop_at) {
        std::vector<int> prev_node(arcs.size()), prev_arc(arcs.size());
        std::vector<int> queue;
        while (stop_at <= 0 || flow < stop_at) {
            std::fill(prev_node.begin(), prev_node.end(), -1);
            prev_node[static_cast<size_t>(source)] = source;
            queue.clear();
            queue.push_back(source);
            bool reached = false;
            for (size_t head = 0; head < queue.size() && !reached; ++head) {
                int x = queue[head];
                for (size_t i = 0; i < arcs[static_cast<size_t>(x)].size(); ++i) {
                    const Arc& a = arcs[static_cast<size_t>(x)][i];
                    if (a.cap <= 0 || prev_node[static_cast<size_t>(a.to)] >= 0) continue;
                    prev_node[static_cast<size_t>(a.to)] = x;
                    prev_arc[static_cast<size_t>(a.to)] = static_cast<int>(i);
                    if (a.to == sink) {
                        reached = true;
                        break;
                    }
                    queue.push_back(a.to);
                }
            }
            if (!reached) break;
            for (int x = sink; x != source; x = prev_node[static_cast<size_t>(x)]) {
                int p = prev_node[static_cast<size_t>(x)];
                Arc& a = arcs[static_cast<size_t>(p)]
                             [static_cast<size_t>(prev_arc[static_cast<size_t>(x)])];
                a.cap -= 1;
                arcs[static_cast<size_t>(a.to)][static_cast<size_t>(a.rev)].cap += 1;
            }
            ++flow;
        }
    }

    // Vertices whose in->out arc crosses the residual reachability frontier
    // form a minimum vertex cut once the flow is maximum.
    VertexSet min_cut() const {
        std::vector<char> seen(arcs.size(), 0);
        std::vector<int> queue{source};
        seen[static_cast<size_t>(source)] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            for (const Arc& a : arcs[static_cast<size_t>(queue[head])]) {
                if (a.cap <= 0 || seen[static_cast<size_t>(a.to)]) continue;
                seen[static_cast<size_t>(a.to)] = 1;
                queue.push_back(a.to);
            }
        }
        VertexSet cut;
        for (size_t w = 0; 2 * w + 1 < arcs.size(); ++w)
            if (seen[2 * w] && !seen[2 * w + 1]) cut.push_back(static_cast<int>(w));
        return cut;
    }
};

void check_kappa_pair_args(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw PreconditionError("kappa_pair requires two distinct vertices");
    if (g.has_edge(u, v))
        throw PreconditionError(
            "kappa_pair requires a non-adjacent pair (adjacent queries rejected)");
}

}  // namespace

int kappa_pair(const Graph& g, int u, int v, int stop_at) {
    check_kappa_pair_args(g, u, v);
    VertexFlow flow(g, u, v);
    flow.run(stop_at);
    return flow.flow;
}

std::pair<int, VertexSet> kappa_pair_with_cut(const Graph& g, int u, int v) {
    check_kappa_pair_args(g, u, v);
    VertexFlow flow(g, u, v);
    flow.run(0);
    return {flow.flow, flow.min_cut()};
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1 || k > 3) throw PreconditionError("is_k_connected supports k in {1,2,3}");
    int n = g.vertex_count();
    if (n <= k) return false;

    LowpointEngine engine(g);
    engine.run(-1);
    if (!engine.connected()) return false;
    if (k == 1) return true;
    if (engine.has_articulation()) return false;
    if (k == 2) return true;

    for (int a = 0; a < n; ++a) {
        engine.run(a);
        if (!engine.connected() || engine.has_articulation()) return false;
    }
    return true;
}

std::vector<SeparatorPair> two_separators(const Graph& g) {
    if (g.vertex_count() < 4)
        throw PreconditionError("two_separators requires at least 4 vertices");
    if (!is_k_connected(g, 2)) throw PreconditionError("two_separators requires a 2-connected graph");

    // (a,b) separates iff b is an articulation vertex of G-a.
    std::set<std::pair<int, int>> found;
    LowpointEngine engine(g);
    for (int a = 0; a < g.vertex_count(); ++a) {
        engine.run(a);
        const auto& articulation = engine.articulation();
        for (int b = 0; b < g.vertex_count(); ++b)
            if (articulation[static_cast<size_t>(b)])
                found.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<SeparatorPair> out;
    out.reserve(found.size());
    for (const auto& [a, b] : found) out.push_back({a, b});
    return out;
}

Graph augmented_graph(const Graph& g) {
    if (!is_k_connected(g, 2)) throw PreconditionError("augmented_graph requires a 2-connected graph");
    if (g.vertex_count() < 4) return g;

    std::vector<Edge> edges = g.edges();
    for (const SeparatorPair& s : two_separators(g))
        if (!g.has_edge(s.a, s.b)) edges.push_back(make_edge(s.a, s.b));
    std::sort(edges.begin(), edges.end());
    return Graph(g.vertex_count(), std::move(edges), g.labels());
}

MappedGraph cleave(const Graph& g, SeparatorPair s, const VertexSet& c) {
    g.check_vertex(s.a);
    g.check_vertex(s.b);
    VertexSet side = normalize_vertex_set(g, c);

    VertexSet rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != s.a && v != s.b) rest.push_back(v);
    MappedGraph removed = induced_subgraph(g, rest);
    bool matches = false;
    for (const VertexSet& comp_local : components(removed.graph)) {
        VertexSet comp;
        for (int v : comp_local) comp.push_back(removed.to_parent[static_cast<size_t>(v)]);
        std::sort(comp.begin(), comp.end());
        if (comp == side) {
            matches = true;
            break;
        }
    }
    if (!matches)
        throw PreconditionError("cleave: the given set is not a component of G-{a,b}");

    VertexSet keep = side;
    keep.push_back(s.a);
    keep.push_back(s.b);
    std::sort(keep.begin(), keep.end());
    MappedGraph out = induced_subgraph(g, keep);
    int na = static_cast<int>(std::lower_bound(keep.begin(), keep.end(), s.a) - keep.begin());
    int nb = static_cast<int>(std::lower_bound(keep.begin(), keep.end(), s.b) - keep.begin());
    if (!out.graph.has_edge(na, nb)) out.graph = out.graph.with_edge(na, nb);
    return out;
}

ThreeBlockResult three_block(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw PreconditionError("three_block requires two distinct vertices");
    if (g.has_edge(u, v)) throw PreconditionError("three_block requires a non-adjacent pair");
    if (!is_k_connected(g, 2)) throw PreconditionError("three_block requires a 2-connected graph");
    if (kappa_pair(g, u, v, 3) < 3)
        throw PreconditionError("three_block requires kappa(u,v) >= 3");

    {
        VertexSet rest;
        for (int w = 0; w < g.vertex_count(); ++w)
            if (w != u && w != v) rest.push_back(w);
        if (components(induced_subgraph(g, rest).graph).size() >= 2)
            return {true, std::nullopt};
    }

    ThreeBlock result;
    result.block = g;
    result.to_parent.resize(static_cast<size_t>(g.vertex_count()));
    for (int w = 0; w < g.vertex_count(); ++w) result.to_parent[static_cast<size_t>(w)] = w;
    result.u = u;
    result.v = v;

    while (true) {
        std::vector<SeparatorPair> seps = two_separators(result.block);
        if (seps.empty()) break;
        SeparatorPair s = seps.front();  // lexicographically smallest
        if (std::min(result.u, result.v) == s.a && std::max(result.u, result.v) == s.b)
            throw PreconditionError("three_block: the pair became a separator mid-cleaving");

        // Locate the component of block-{a,b} holding the pair.
        VertexSet rest;
        for (int w = 0; w < result.block.vertex_count(); ++w)
            if (w != s.a && w != s.b) rest.push_back(w);
        MappedGraph removed = induced_subgraph(result.block, rest);
        int probe = (result.u != s.a && result.u != s.b) ? result.u : result.v;
        VertexSet side;
        for (const VertexSet& comp_local : components(removed.graph)) {
            VertexSet comp;
            for (int w : comp_local) comp.push_back(removed.to_parent[static_cast<size_t>(w)]);
            std::sort(comp.begin(), comp.end());
            if (std::binary_search(comp.begin(), comp.end(), probe)) {
                side = std::move(comp);
                break;
            }
        }
        int other = (probe == result.u) ? result.v : result.u;
        if (side.empty() ||
            (other != s.a && other != s.b &&
             !std::binary_search(side.begin(), side.end(), other)))
            throw PreconditionError("three_block: a 2-separator split the pair despite kappa >= 3");

        bool adds_virtual = !result.block.has_edge(s.a, s.b);
        MappedGraph next = cleave(result.block, s, side);

        // Remap the bookkeeping through the shrink.
        std::vector<int> old_to_new(static_cast<size_t>(result.block.vertex_count()), -1);
        for (size_t i = 0; i < next.to_parent.size(); ++i)
            old_to_new[static_cast<size_t>(next.to_parent[i])] = static_cast<int>(i);

        std::vector<Edge> kept_virtual;
        for (const Edge& e : result.added_edges) {
            int na = old_to_new[static_cast<size_t>(e.first)];
            int nb = old_to_new[static_cast<size_t>(e.second)];
            if (na >= 0 && nb >= 0) kept_virtual.push_back(make_edge(na, nb));
        }
        if (adds_virtual)
            kept_virtual.push_back(make_edge(old_to_new[static_cast<size_t>(s.a)],
                                             old_to_new[static_cast<size_t>(s.b)]));

        std::vector<int> to_parent(next.to_parent.size());
        for (size_t i = 0; i < next.to_parent.size(); ++i)
            to_parent[i] = result.to_parent[static_cast<size_t>(next.to_parent[i])];

        result.u = old_to_new[static_cast<size_t>(result.u)];
        result.v = old_to_new[static_cast<size_t>(result.v)];
        result.block = std::move(next.graph);
        result.to_parent = std::move(to_parent);
        std::sort(kept_virtual.begin(), kept_virtual.end());
        result.added_edges = std::move(kept_virtual);
    }

    if (result.block.has_edge(result.u, result.v))
        throw PreconditionError("three_block: the virtual edge landed on the queried pair");
    return {false, std::move(result)};
}

std::vector<VertexSet> biconnected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0),
        parent(static_cast<size_t>(n), -1);
    std::vector<size_t> iter(static_cast<size_t>(n), 0);
    std::vector<int> stack;
    std::vector<Edge> edge_stack;
    std::vector<VertexSet> blocks;
    int clock = 0;

    auto pop_block = [&](const Edge& until) {
        VertexSet block;
        while (!edge_stack.empty()) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
            if (e == until) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)] >= 0) continue;
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = clock++;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            const auto& nb = g.neighbors(v);
            if (iter[static_cast<size_t>(v)] < nb.size()) {
                int w = nb[iter[static_cast<size_t>(v)]++];
                if (disc[static_cast<size_t>(w)] < 0) {
                    parent[static_cast<size_t>(w)] = v;
                    edge_stack.push_back({v, w});
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = clock++;
                    stack.push_back(w);
                } else if (w != parent[static_cast<size_t>(v)] &&
                           disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(v)]) {
                    edge_stack.push_back({v, w});
                    low[static_cast<size_t>(v)] =
                        std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(w)]);
                }
            } else {
                stack.pop_back();
                int p = parent[static_cast<size_t>(v)];
                if (p >= 0) {
                    low[static_cast<size_t>(p)] =
                        std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
                    if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(p)])
                        pop_block({p, v});
                }
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

}  // namespace rigidlink
