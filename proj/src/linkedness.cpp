#include "rigidlink/linkedness.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <random>
#include <thread>

namespace rigidlink {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Adjacent: return "Adjacent";
        case Verdict::GloballyLoose: return "GloballyLoose";
        case Verdict::WeaklyGloballyLinked: return "WeaklyGloballyLinked";
    }
    return "?";
}

const char* to_string(PairReason r) {
    switch (r) {
        case PairReason::AdjacentEdge: return "AdjacentEdge";
        case PairReason::NotLinked: return "NotLinked";
        case PairReason::KappaAtMostTwo: return "KappaAtMostTwo";
        case PairReason::SeparatingPair: return "SeparatingPair";
        case PairReason::CliqueOfThreeBlockGloballyRigid: return "CliqueOfThreeBlockGloballyRigid";
        case PairReason::CliqueOfThreeBlockNotGloballyRigid:
            return "CliqueOfThreeBlockNotGloballyRigid";
    }
    return "?";
}

const char* to_string(RigidityFailure f) {
    switch (f) {
        case RigidityFailure::None: return "None";
        case RigidityFailure::TooSmallNotComplete: return "TooSmallNotComplete";
        case RigidityFailure::NotThreeConnected: return "NotThreeConnected";
        case RigidityFailure::NotRigid: return "NotRigid";
        case RigidityFailure::NotRedundantlyRigid: return "NotRedundantlyRigid";
    }
    return "?";
}

GlobalRigidityVerdict is_globally_rigid2(const Graph& g) {
    GlobalRigidityVerdict verdict;
    int n = g.vertex_count();
    if (n <= 3) {
        bool complete = g.edge_count() == n * (n - 1) / 2;
        verdict.globally_rigid = complete;
        if (!complete) verdict.failure = RigidityFailure::TooSmallNotComplete;
        return verdict;
    }
    if (!is_k_connected(g, 3)) {
        verdict.failure = RigidityFailure::NotThreeConnected;
        // Produce a separating set of the smallest size we can find.
        if (components(g).size() > 1) {
            verdict.cut_set = {};
        } else {
            bool found = false;
            for (int a = 0; a < n && !found; ++a) {
                VertexSet rest;
                for (int w = 0; w < n; ++w)
                    if (w != a) rest.push_back(w);
                if (components(induced_subgraph(g, rest).graph).size() > 1) {
                    verdict.cut_set = {a};
                    found = true;
                }
            }
            if (!found) {
                auto seps = two_separators(g);
                assert(!seps.empty());
                verdict.cut_set = {seps.front().a, seps.front().b};
            }
        }
        return verdict;
    }
    if (!is_rigid2(g)) {
        verdict.failure = RigidityFailure::NotRigid;
        return verdict;
    }
    std::vector<Edge> bridges = r2_bridges(g);
    if (!bridges.empty()) {
        verdict.failure = RigidityFailure::NotRedundantlyRigid;
        verdict.bridge = bridges.front();
        return verdict;
    }
    verdict.globally_rigid = true;
    return verdict;
}

namespace {

// Shared state for one or many pair queries on the same graph: the block
// decomposition is computed once, and each block lazily builds its induced
// graph, pebble game, separator list, 3-block units, and a memo of
// Clique(B,V0) verdicts keyed by the circuit span.
class PairDecisionContext {
public:
    explicit PairDecisionContext(const Graph& g) : g_(g) {}

    PairClassification classify(int u, int v, bool with_certificate) {
        g_.check_vertex(u);
        g_.check_vertex(v);
        if (u == v) throw PreconditionError("classify_pair requires two distinct vertices");

        if (g_.has_edge(u, v)) return plain(u, v, Verdict::Adjacent, PairReason::AdjacentEdge);

        // (1) kappa <= 2 (covering disconnected and cut-vertex cases).
        if (kappa_pair(g_, u, v, 3) <= 2) {
            PairClassification out = plain(u, v, Verdict::GloballyLoose, PairReason::KappaAtMostTwo);
            if (with_certificate) {
                auto [kappa, cut] = kappa_pair_with_cut(g_, u, v);
                PairCertificate certificate;
                certificate.kappa = kappa;
                certificate.kappa_cut = std::move(cut);
                out.certificate = std::move(certificate);
            }
            return out;
        }

        BlockState& block = block_of(u, v);
        int hu = local_id(block, u), hv = local_id(block, v);

        // (2) unlinked pairs are loose.
        if (block.game->would_increase_rank(hu, hv)) {
            PairClassification out = plain(u, v, Verdict::GloballyLoose, PairReason::NotLinked);
            if (with_certificate) {
                PairCertificate certificate;
                certificate.block_vertices = block.h.to_parent;
                out.certificate = std::move(certificate);
            }
            return out;
        }

        PairClassification out;
        out.u = u;
        out.v = v;
        PairCertificate certificate;
        certificate.block_vertices = block.h.to_parent;

        // (3) a linked separating pair is weakly globally linked.
        if (is_separator(block, hu, hv)) {
            out.verdict = Verdict::WeaklyGloballyLinked;
            out.reason = PairReason::SeparatingPair;
            if (with_certificate) {
                certificate.separating_pair = SeparatorPair{std::min(u, v), std::max(u, v)};
                out.certificate = std::move(certificate);
            }
            return out;
        }

        // (4) decide by the global rigidity of Clique(B, V0) for the 3-block
        // B and the span V0 of a circuit through the pair.
        size_t unit_index = unit_of(block, hu, hv);
        const ThreeBlock& unit = *block.units[unit_index];
        int bu = unit_id(unit, hu), bv = unit_id(unit, hv);

        PebbleGame& bg = *block.unit_games[unit_index];
        if (bg.would_increase_rank(bu, bv))
            throw PreconditionError("internal: pair linked in block but not in its 3-block");
        VertexSet span = bg.fundamental_span(bu, bv);

        GlobalRigidityVerdict clique_verdict;
        MappedGraph clique;
        auto memo = block.clique_memo.find({unit_index, span});
        if (memo != block.clique_memo.end() && !with_certificate) {
            clique_verdict = memo->second;
        } else {
            clique = clique_graph(unit.block, span);
            clique_verdict = is_globally_rigid2(clique.graph);
            block.clique_memo.emplace(std::make_pair(unit_index, span), clique_verdict);
        }

        out.verdict = clique_verdict.globally_rigid ? Verdict::WeaklyGloballyLinked
                                                    : Verdict::GloballyLoose;
        out.reason = clique_verdict.globally_rigid
                         ? PairReason::CliqueOfThreeBlockGloballyRigid
                         : PairReason::CliqueOfThreeBlockNotGloballyRigid;
        if (with_certificate) {
            ThreeBlock reported = unit;  // rebase ids onto the input graph
            reported.u = bu;
            reported.v = bv;
            for (int& p : reported.to_parent)
                p = block.h.to_parent[static_cast<size_t>(p)];
            for (int w : span)
                certificate.circuit_vertices.push_back(
                    reported.to_parent[static_cast<size_t>(w)]);
            std::sort(certificate.circuit_vertices.begin(), certificate.circuit_vertices.end());
            for (int& p : clique.to_parent) p = reported.to_parent[static_cast<size_t>(p)];
            certificate.three_block = std::move(reported);
            certificate.clique_of_block = std::move(clique);
            certificate.clique_verdict = clique_verdict;
            out.certificate = std::move(certificate);
        }
        return out;
    }

private:
    struct BlockState {
        MappedGraph h;
        std::unique_ptr<PebbleGame> game;
        bool seps_ready = false;
        std::vector<SeparatorPair> seps;
        // 3-blocks discovered so far (block-local ids), plus a pebble game
        // per unit; both indexed by discovery order.
        std::vector<std::unique_ptr<ThreeBlock>> units;
        std::vector<std::unique_ptr<PebbleGame>> unit_games;
        std::map<std::pair<size_t, VertexSet>, GlobalRigidityVerdict> clique_memo;
    };

    static PairClassification plain(int u, int v, Verdict verdict, PairReason reason) {
        PairClassification out;
        out.u = u;
        out.v = v;
        out.verdict = verdict;
        out.reason = reason;
        return out;
    }

    BlockState& block_of(int u, int v) {
        if (blocks_.empty()) blocks_ = biconnected_components(g_);
        for (size_t i = 0; i < blocks_.size(); ++i) {
            const VertexSet& vs = blocks_[i];
            if (std::binary_search(vs.begin(), vs.end(), u) &&
                std::binary_search(vs.begin(), vs.end(), v)) {
                auto it = states_.find(i);
                if (it == states_.end()) {
                    auto state = std::make_unique<BlockState>();
                    state->h = induced_subgraph(g_, vs);
                    state->game = std::make_unique<PebbleGame>(PebbleGame::play(state->h.graph));
                    it = states_.emplace(i, std::move(state)).first;
                }
                return *it->second;
            }
        }
        throw PreconditionError("internal: no common block for a pair with kappa >= 3");
    }

    static int local_id(const BlockState& block, int original) {
        const VertexSet& vs = block.h.to_parent;
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), original) - vs.begin());
    }

    // Direct component check; cheaper than materializing the full separator
    // list for a single pair.
    static bool is_separator(BlockState& block, int hu, int hv) {
        const Graph& h = block.h.graph;
        VertexSet rest;
        rest.reserve(static_cast<size_t>(h.vertex_count()));
        for (int w = 0; w < h.vertex_count(); ++w)
            if (w != hu && w != hv) rest.push_back(w);
        if (rest.empty()) return false;
        return components(induced_subgraph(h, rest).graph).size() >= 2;
    }

    void ensure_separators(BlockState& block) {
        if (!block.seps_ready) {
            block.seps = block.h.graph.vertex_count() >= 4 ? two_separators(block.h.graph)
                                                           : std::vector<SeparatorPair>{};
            block.seps_ready = true;
        }
    }

    // The 3-block of a pair is the unique maximal 3-connected piece holding
    // it, so any cached unit containing both endpoints is the right one.
    size_t unit_of(BlockState& block, int hu, int hv) {
        for (size_t i = 0; i < block.units.size(); ++i) {
            const ThreeBlock& unit = *block.units[i];
            if (std::binary_search(unit.to_parent.begin(), unit.to_parent.end(), hu) &&
                std::binary_search(unit.to_parent.begin(), unit.to_parent.end(), hv))
                return i;
        }
        // A block without 2-separators is its own 3-block.
        ensure_separators(block);
        if (block.seps.empty()) {
            auto unit = std::make_unique<ThreeBlock>();
            unit->block = block.h.graph;
            unit->to_parent.resize(static_cast<size_t>(block.h.graph.vertex_count()));
            for (int w = 0; w < block.h.graph.vertex_count(); ++w)
                unit->to_parent[static_cast<size_t>(w)] = w;
            unit->u = hu;
            unit->v = hv;
            block.units.push_back(std::move(unit));
            block.unit_games.push_back(
                std::make_unique<PebbleGame>(PebbleGame::play(block.units.back()->block)));
            return block.units.size() - 1;
        }
        ThreeBlockResult tb = three_block(block.h.graph, hu, hv);
        if (tb.separating_pair || !tb.block.has_value())
            throw PreconditionError("internal: separating pair reached 3-block extraction");
        block.units.push_back(std::make_unique<ThreeBlock>(std::move(*tb.block)));
        block.unit_games.push_back(
            std::make_unique<PebbleGame>(PebbleGame::play(block.units.back()->block)));
        return block.units.size() - 1;
    }

    static int unit_id(const ThreeBlock& unit, int block_local) {
        return static_cast<int>(std::lower_bound(unit.to_parent.begin(), unit.to_parent.end(),
                                                 block_local) -
                                unit.to_parent.begin());
    }

    const Graph& g_;
    std::vector<VertexSet> blocks_;
    std::map<size_t, std::unique_ptr<BlockState>> states_;
};

}  // namespace

PairClassification classify_pair(const Graph& g, int u, int v, bool with_certificate) {
    PairDecisionContext context(g);
    return context.classify(u, v, with_certificate);
}

std::vector<PairClassification> classify_all_pairs(const Graph& g, int threads,
                                                   bool with_certificate) {
    std::vector<Edge> pairs;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) pairs.push_back({u, v});

    std::vector<PairClassification> results(pairs.size());
    threads = std::max(1, threads);
    if (threads == 1 || pairs.size() < 2) {
        PairDecisionContext context(g);
        for (size_t i = 0; i < pairs.size(); ++i)
            results[i] = context.classify(pairs[i].first, pairs[i].second, with_certificate);
        return results;
    }

    // One context per worker: contexts are mutable caches, and per-pair
    // results do not depend on which worker computes them.
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&, t]() {
            PairDecisionContext context(g);
            for (size_t i = static_cast<size_t>(t); i < pairs.size();
                 i += static_cast<size_t>(threads))
                results[i] = context.classify(pairs[i].first, pairs[i].second, with_certificate);
        });
    }
    for (auto& w : workers) w.join();
    return results;
}

std::vector<Edge> weakly_linked_pairs(const Graph& g, int threads) {
    std::vector<Edge> out;
    for (const PairClassification& pc : classify_all_pairs(g, threads, /*with_certificate=*/false))
        if (pc.verdict == Verdict::WeaklyGloballyLinked) out.push_back(make_edge(pc.u, pc.v));
    return out;
}

bool sufficient_condition_wgl(const Graph& g, int u, int v, const VertexSet& x) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw PreconditionError("pair must be two distinct vertices");
    if (!is_k_connected(g, 3))
        throw PreconditionError("sufficient_condition_wgl requires a 3-connected graph");

    VertexSet keep = normalize_vertex_set(g, x);
    if (!std::binary_search(keep.begin(), keep.end(), u) ||
        !std::binary_search(keep.begin(), keep.end(), v))
        throw PreconditionError("X is not (u,v)-rigid: the pair is not contained in X");
    MappedGraph ind = induced_subgraph(g, keep);
    if (!is_rigid2(ind.graph))
        throw PreconditionError("X is not (u,v)-rigid: the induced subgraph is not rigid");

    return is_globally_rigid2(clique_graph(g, keep).graph).globally_rigid;
}

namespace {

SubsetSparsityCheck check_subset(const Graph& g, VertexSet u) {
    MappedGraph first = induced_subgraph(g, u);
    // The sparsity statement concerns subsets without isolated vertices.
    VertexSet active;
    for (int w = 0; w < first.graph.vertex_count(); ++w)
        if (first.graph.degree(w) > 0) active.push_back(first.to_parent[static_cast<size_t>(w)]);

    SubsetSparsityCheck check;
    check.subset = active;
    if (active.size() < 2) {
        check.bound_ok = check.sum_formula_ok = true;
        return check;
    }
    MappedGraph ind = induced_subgraph(g, active);
    check.induced_edges = ind.graph.edge_count();
    int size = static_cast<int>(active.size());
    check.bound = size >= 3 ? 3 * size - 6 : 1;
    check.bound_ok = check.induced_edges <= check.bound;

    int rank = rank2(ind.graph);
    int sum = 0;
    for (const VertexSet& part : maximal_rigid_subgraphs(ind.graph))
        sum += 2 * static_cast<int>(part.size()) - 3;
    check.sum_formula_ok = (sum == rank);
    return check;
}

}  // namespace

MgrAuditReport audit_minimally_globally_rigid(const Graph& g, int sampled_subsets, uint64_t seed) {
    MgrAuditReport report;
    report.rigidity = is_globally_rigid2(g);
    report.applicable = report.rigidity.globally_rigid;
    if (!report.applicable) return report;

    report.minimal = true;
    for (const Edge& e : g.edges()) {
        if (is_globally_rigid2(g.without_edge(e.first, e.second)).globally_rigid) {
            report.minimal = false;
            report.removable_edge = e;
            break;
        }
    }
    if (!report.minimal) return report;

    int n = g.vertex_count();
    report.edge_bound_ok = g.edge_count() <= std::max(3 * n - 6, 1);

    // Subsets to check: the whole vertex set, every maximal-rigid-subgraph
    // vertex set, and seeded random subsets.
    std::vector<VertexSet> subsets;
    VertexSet all(static_cast<size_t>(n));
    for (int w = 0; w < n; ++w) all[static_cast<size_t>(w)] = w;
    subsets.push_back(all);
    for (VertexSet& part : maximal_rigid_subgraphs(g)) subsets.push_back(std::move(part));

    std::mt19937_64 rng(seed);
    for (int i = 0; i < sampled_subsets && n >= 3; ++i) {
        int size = 3 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, n - 2)));
        VertexSet pick = all;
        for (int j = 0; j < size; ++j)
            std::swap(pick[static_cast<size_t>(j)],
                      pick[static_cast<size_t>(j) + rng() % static_cast<uint64_t>(n - j)]);
        pick.resize(static_cast<size_t>(size));
        std::sort(pick.begin(), pick.end());
        subsets.push_back(std::move(pick));
    }

    report.all_ok = report.edge_bound_ok;
    for (VertexSet& subset : subsets) {
        SubsetSparsityCheck check = check_subset(g, std::move(subset));
        if (!check.bound_ok || !check.sum_formula_ok) {
            report.violations.push_back(check.subset);
            report.all_ok = false;
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace rigidlink
