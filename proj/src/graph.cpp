#include "rigidlink/graph.hpp"

#include <algorithm>
#include <numeric>

namespace rigidlink {

Graph::Graph(int n, std::vector<Edge> edges, std::map<int, std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw PreconditionError("vertex count must be non-negative");
    for (auto& e : edges) {
        if (e.first == e.second)
            throw PreconditionError("self-loop at vertex " + std::to_string(e.first));
        e = make_edge(e.first, e.second);
        if (e.first < 0 || e.second >= n_)
            throw PreconditionError("edge (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ") out of range");
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw PreconditionError("duplicate edge (" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
    edges_ = std::move(edges);

    adjacency_.assign(static_cast<size_t>(n_), {});
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<size_t>(u)].push_back(v);
        adjacency_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

    for (const auto& [v, label] : labels_) {
        if (v < 0 || v >= n_)
            throw PreconditionError("label for out-of-range vertex " + std::to_string(v));
        (void)label;
    }
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nb = adjacency_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> Graph::vertex_by_label(const std::string& label) const {
    for (const auto& [v, l] : labels_)
        if (l == label) return v;
    return std::nullopt;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("cannot add a self-loop");
    if (has_edge(u, v)) throw PreconditionError("edge already present");
    auto edges = edges_;
    edges.push_back(make_edge(u, v));
    return Graph(n_, std::move(edges), labels_);
}

Graph Graph::without_edge(int u, int v) const {
    if (!has_edge(u, v)) throw PreconditionError("edge not present");
    auto edges = edges_;
    edges.erase(std::find(edges.begin(), edges.end(), make_edge(u, v)));
    return Graph(n_, std::move(edges), labels_);
}

VertexSet normalize_vertex_set(const Graph& g, VertexSet members, bool allow_empty) {
    for (int v : members) g.check_vertex(v);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() && !allow_empty)
        throw PreconditionError("vertex set must be non-empty");
    return members;
}

MappedGraph induced_subgraph(const Graph& g, const VertexSet& x) {
    VertexSet keep = normalize_vertex_set(g, x, /*allow_empty=*/true);
    std::vector<int> old_to_new(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < keep.size(); ++i) old_to_new[static_cast<size_t>(keep[i])] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        int nu = old_to_new[static_cast<size_t>(u)], nv = old_to_new[static_cast<size_t>(v)];
        if (nu >= 0 && nv >= 0) edges.push_back(make_edge(nu, nv));
    }
    return {Graph(static_cast<int>(keep.size()), std::move(edges)), std::move(keep)};
}

std::vector<VertexSet> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<VertexSet> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        stack.push_back(s);
        comp[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<size_t>(id)].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[static_cast<size_t>(id)].begin(), out[static_cast<size_t>(id)].end());
    }
    return out;
}

VertexSet neighbors_of_set(const Graph& g, const VertexSet& s) {
    VertexSet inside = normalize_vertex_set(g, s, /*allow_empty=*/true);
    std::vector<char> in_s(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : inside) in_s[static_cast<size_t>(v)] = 1;
    VertexSet out;
    for (int v : inside)
        for (int w : g.neighbors(v))
            if (!in_s[static_cast<size_t>(w)]) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Shared by contract_set / con_graph: merge the vertex classes given by
// `class_of` (classes keyed by their smallest original member), drop loops
// and parallel edges, re-densify ids by increasing representative.
ContractedGraph contract_classes(const Graph& g, const std::vector<int>& representative) {
    int n = g.vertex_count();
    std::vector<int> reps(representative.begin(), representative.end());
    std::vector<int> sorted_reps = reps;
    std::sort(sorted_reps.begin(), sorted_reps.end());
    sorted_reps.erase(std::unique(sorted_reps.begin(), sorted_reps.end()), sorted_reps.end());

    std::vector<int> rep_to_new(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < sorted_reps.size(); ++i)
        rep_to_new[static_cast<size_t>(sorted_reps[i])] = static_cast<int>(i);

    std::vector<int> old_to_new(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        old_to_new[static_cast<size_t>(v)] = rep_to_new[static_cast<size_t>(reps[static_cast<size_t>(v)])];

    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        int nu = old_to_new[static_cast<size_t>(u)], nv = old_to_new[static_cast<size_t>(v)];
        if (nu != nv) edges.push_back(make_edge(nu, nv));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return {Graph(static_cast<int>(sorted_reps.size()), std::move(edges)), std::move(old_to_new)};
}

}  // namespace

ContractedGraph contract_set(const Graph& g, const VertexSet& s) {
    VertexSet merged = normalize_vertex_set(g, s);
    std::vector<int> rep(static_cast<size_t>(g.vertex_count()));
    std::iota(rep.begin(), rep.end(), 0);
    int target = merged.front();  // smallest id of the merged set
    for (int v : merged) rep[static_cast<size_t>(v)] = target;
    return contract_classes(g, rep);
}

ContractedGraph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw PreconditionError("contract_edge: (" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not an edge");
    return contract_set(g, {u, v});
}

MappedGraph clique_graph(const Graph& g, const VertexSet& x) {
    VertexSet keep = normalize_vertex_set(g, x);
    std::vector<char> in_x(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : keep) in_x[static_cast<size_t>(v)] = 1;

    std::vector<int> old_to_new(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < keep.size(); ++i) old_to_new[static_cast<size_t>(keep[i])] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (in_x[static_cast<size_t>(u)] && in_x[static_cast<size_t>(v)])
            edges.push_back(make_edge(old_to_new[static_cast<size_t>(u)], old_to_new[static_cast<size_t>(v)]));

    // One clique per deleted component, on that component's neighborhood.
    VertexSet rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_x[static_cast<size_t>(v)]) rest.push_back(v);
    if (!rest.empty()) {
        MappedGraph outside = induced_subgraph(g, rest);
        for (const VertexSet& comp_local : components(outside.graph)) {
            VertexSet comp;
            for (int v : comp_local) comp.push_back(outside.to_parent[static_cast<size_t>(v)]);
            std::sort(comp.begin(), comp.end());
            VertexSet nbhd = neighbors_of_set(g, comp);  // subset of X
            for (size_t i = 0; i < nbhd.size(); ++i)
                for (size_t j = i + 1; j < nbhd.size(); ++j)
                    edges.push_back(make_edge(old_to_new[static_cast<size_t>(nbhd[i])],
                                              old_to_new[static_cast<size_t>(nbhd[j])]));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return {Graph(static_cast<int>(keep.size()), std::move(edges)), std::move(keep)};
}

ContractedGraph con_graph(const Graph& g, const VertexSet& x) {
    VertexSet keep = normalize_vertex_set(g, x);
    std::vector<char> in_x(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : keep) in_x[static_cast<size_t>(v)] = 1;

    std::vector<int> rep(static_cast<size_t>(g.vertex_count()));
    std::iota(rep.begin(), rep.end(), 0);

    VertexSet rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_x[static_cast<size_t>(v)]) rest.push_back(v);
    if (!rest.empty()) {
        MappedGraph outside = induced_subgraph(g, rest);
        for (const VertexSet& comp_local : components(outside.graph)) {
            int target = outside.to_parent[static_cast<size_t>(comp_local.front())];
            for (int v : comp_local)
                rep[static_cast<size_t>(outside.to_parent[static_cast<size_t>(v)])] = target;
        }
    }
    return contract_classes(g, rep);
}

Graph clique_sum(const Graph& g1, const Graph& g2,
                 const std::vector<std::pair<int, int>>& identification) {
    if (identification.empty())
        throw PreconditionError("clique_sum: identification must be non-empty");

    VertexSet side1, side2;
    for (const auto& [a, b] : identification) {
        g1.check_vertex(a);
        g2.check_vertex(b);
        side1.push_back(a);
        side2.push_back(b);
    }
    auto distinct = [](VertexSet s) {
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    };
    if (!distinct(side1) || !distinct(side2))
        throw PreconditionError("clique_sum: identification is not a bijection");
    for (size_t i = 0; i < side1.size(); ++i)
        for (size_t j = i + 1; j < side1.size(); ++j) {
            if (!g1.has_edge(side1[i], side1[j]))
                throw PreconditionError("clique_sum: mapped set is not a clique in the first graph");
            if (!g2.has_edge(side2[i], side2[j]))
                throw PreconditionError("clique_sum: mapped set is not a clique in the second graph");
        }

    // g1 keeps its ids; unidentified g2 vertices follow in increasing order.
    std::vector<int> map2(static_cast<size_t>(g2.vertex_count()), -1);
    for (const auto& [a, b] : identification) map2[static_cast<size_t>(b)] = a;
    int next = g1.vertex_count();
    for (int v = 0; v < g2.vertex_count(); ++v)
        if (map2[static_cast<size_t>(v)] < 0) map2[static_cast<size_t>(v)] = next++;

    std::vector<Edge> edges = g1.edges();
    for (const auto& [u, v] : g2.edges())
        edges.push_back(make_edge(map2[static_cast<size_t>(u)], map2[static_cast<size_t>(v)]));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(next, std::move(edges));
}

bool validate_graph(const Graph& g) {
    if (g.vertex_count() < 0) return false;
    const auto& edges = g.edges();
    if (!std::is_sorted(edges.begin(), edges.end())) return false;
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
    size_t adjacency_total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        if (!std::is_sorted(nb.begin(), nb.end())) return false;
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
        for (int w : nb) {
            if (w < 0 || w >= g.vertex_count() || w == v) return false;
            if (!g.has_edge(w, v)) return false;
        }
        adjacency_total += nb.size();
    }
    if (adjacency_total != 2 * edges.size()) return false;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v >= g.vertex_count() || u >= v) return false;
        if (!g.has_edge(u, v)) return false;
    }
    for (const auto& [v, label] : g.labels()) {
        if (v < 0 || v >= g.vertex_count()) return false;
        (void)label;
    }
    return true;
}

}  // namespace rigidlink
