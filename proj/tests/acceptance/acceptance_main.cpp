// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Optional arguments select individual criteria by number, e.g.
//   rigidlink_acceptance 1 4 7

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rigidlink/connectivity.hpp"
#include "rigidlink/graph.hpp"
#include "rigidlink/linkedness.hpp"
#include "rigidlink/oracle.hpp"
#include "rigidlink/pebble.hpp"
#include "testutil.hpp"

using namespace rigidlink;
namespace tu = rigidlink::testutil;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& message) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += message;
    }
};

// Shared corpus for criteria 1-3: every connected labeled graph on at most
// 6 vertices plus 1000 seeded random graphs on at most 9.
const std::vector<Graph>& corpus() {
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> out;
        tu::for_each_connected_graph(6, [&](const Graph& g) { out.push_back(g); });
        std::mt19937_64 rng(0xc0ffee);
        for (int i = 0; i < 1000; ++i) {
            int n = 2 + static_cast<int>(tu::rand_below(rng, 8));
            int m = static_cast<int>(tu::rand_below(rng, n * (n - 1) / 2 + 1));
            out.push_back(tu::random_graph(n, m, rng));
        }
        return out;
    }();
    return graphs;
}

Outcome criterion1() {
    Outcome outcome;
    auto start = Clock::now();
    uint64_t index = 0;
    int mismatches = 0, seed_instabilities = 0;
    for (const Graph& g : corpus()) {
        RankOracleReport oracle = generic_rank(g, 2, 0xfeed + index, 2);
        if (rank2(g) != oracle.rank) ++mismatches;
        if (index % 50 == 0) {
            // unlucky-field detector: the rank must not depend on the seed
            for (uint64_t seed = 1; seed <= 5; ++seed)
                if (generic_rank(g, 2, seed).rank != oracle.rank) ++seed_instabilities;
        }
        ++index;
    }
    double elapsed = seconds_since(start);
    if (mismatches > 0) outcome.fail(std::to_string(mismatches) + " rank mismatches");
    if (seed_instabilities > 0)
        outcome.fail(std::to_string(seed_instabilities) + " seed-dependent ranks");
    if (elapsed > 300.0) outcome.fail("runtime " + std::to_string(elapsed) + "s exceeds 5 minutes");
    outcome.detail = std::to_string(corpus().size()) + " graphs";
    return outcome;
}

Outcome criterion2() {
    Outcome outcome;
    int mismatches = 0, small_mismatches = 0;
    for (const Graph& g : corpus()) {
        bool mine = is_globally_rigid2(g).globally_rigid;
        if (g.vertex_count() >= 4) {
            bool reference = tu::brute_is_k_connected(g, 3) && g.edge_count() >= 3 &&
                             tu::oracle_redundantly_rigid2(g);
            if (mine != reference) ++mismatches;
        } else {
            // below the characterization's vertex bound the convention is completeness
            int n = g.vertex_count();
            if (mine != (g.edge_count() == n * (n - 1) / 2)) ++small_mismatches;
        }
    }
    if (mismatches > 0) outcome.fail(std::to_string(mismatches) + " characterization mismatches");
    if (small_mismatches > 0)
        outcome.fail(std::to_string(small_mismatches) + " small-case mismatches");
    outcome.detail = std::to_string(corpus().size()) + " graphs";
    return outcome;
}

Outcome criterion3() {
    Outcome outcome;
    int mismatches = 0;
    size_t checked = 0;
    for (const Graph& g : corpus()) {
        if (g.vertex_count() < 4) continue;
        ++checked;
        bool all_linked = true;
        for (const PairClassification& pc : classify_all_pairs(g))
            all_linked &= (pc.verdict == Verdict::WeaklyGloballyLinked);
        if (all_linked != is_globally_rigid2(g).globally_rigid) ++mismatches;
    }
    if (mismatches > 0) outcome.fail(std::to_string(mismatches) + " mismatches");
    outcome.detail = std::to_string(checked) + " graphs with |V| >= 4";
    return outcome;
}

Outcome criterion4() {
    Outcome outcome;
    std::mt19937_64 rng(0x51ac);
    int graphs_done = 0, pairs_done = 0, mismatches = 0;
    while (graphs_done < 200) {
        int n = 6 + static_cast<int>(tu::rand_below(rng, 3));
        int m = (3 * n + 1) / 2 + static_cast<int>(tu::rand_below(rng, 4));
        Graph g = tu::random_3connected(n, m, rng);
        ++graphs_done;

        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v) || !is_linked2(g, u, v)) continue;
                ++pairs_done;
                // 3-connected graph: the 3-block is the graph itself
                auto circuits = tu::brute_circuits_containing(g, u, v);
                if (circuits.empty()) {
                    ++mismatches;
                    continue;
                }
                bool first_verdict = false, have_first = false, consistent = true;
                for (const Circuit& c : circuits) {
                    bool verdict =
                        is_globally_rigid2(clique_graph(g, c.vertices).graph).globally_rigid;
                    if (!have_first) {
                        first_verdict = verdict;
                        have_first = true;
                    } else if (verdict != first_verdict) {
                        consistent = false;
                    }
                }
                PairClassification pc = classify_pair(g, u, v, /*with_certificate=*/false);
                bool engine_verdict = pc.verdict == Verdict::WeaklyGloballyLinked;
                if (!consistent || engine_verdict != first_verdict ||
                    pc.reason == PairReason::SeparatingPair)
                    ++mismatches;
            }
        }
    }
    if (mismatches > 0) outcome.fail(std::to_string(mismatches) + " inconsistent pairs");
    outcome.detail = std::to_string(graphs_done) + " graphs, " + std::to_string(pairs_done) +
                     " linked pairs, every circuit choice agrees";
    return outcome;
}

// criterion 5 pieces -------------------------------------------------------

int monotonicity_trials(std::mt19937_64& rng, int target, Outcome& outcome) {
    int done = 0, violations = 0;
    while (done < target) {
        int n = 5 + static_cast<int>(tu::rand_below(rng, 6));
        Graph g = (tu::rand_below(rng, 2) == 0)
                      ? tu::random_rigid(n, static_cast<int>(tu::rand_below(rng, 4)), rng)
                      : tu::random_graph(n, n + static_cast<int>(tu::rand_below(rng, n)), rng);
        std::vector<Edge> absent;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!g.has_edge(a, b)) absent.push_back({a, b});
        if (absent.size() < 2) continue;
        size_t pick_pair = tu::rand_below(rng, absent.size());
        size_t pick_edge = tu::rand_below(rng, absent.size() - 1);
        if (pick_edge >= pick_pair) ++pick_edge;
        auto [u, v] = absent[pick_pair];
        auto [x, y] = absent[pick_edge];
        ++done;
        if (classify_pair(g, u, v, false).verdict == Verdict::WeaklyGloballyLinked &&
            classify_pair(g.with_edge(x, y), u, v, false).verdict !=
                Verdict::WeaklyGloballyLinked)
            ++violations;
    }
    if (violations > 0)
        outcome.fail("monotonicity: " + std::to_string(violations) + " violations");
    return done;
}

int smoothing_trials(std::mt19937_64& rng, int target, Outcome& outcome) {
    int done = 0, violations = 0;
    while (done < target) {
        int n = 5 + static_cast<int>(tu::rand_below(rng, 5));  // plus z stays <= 10
        Graph h = tu::random_rigid(n, static_cast<int>(tu::rand_below(rng, 4)), rng);
        int x = static_cast<int>(tu::rand_below(rng, static_cast<uint64_t>(n)));
        int y = static_cast<int>(tu::rand_below(rng, static_cast<uint64_t>(n - 1)));
        if (y >= x) ++y;
        std::vector<Edge> edges = h.edges();
        edges.push_back(make_edge(x, n));
        edges.push_back(make_edge(y, n));
        Graph g(n + 1, std::move(edges));
        Graph smoothed = h.has_edge(x, y) ? h : h.with_edge(x, y);
        ++done;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                if (u == std::min(x, y) && v == std::max(x, y)) continue;
                if (classify_pair(g, u, v, false).verdict !=
                    classify_pair(smoothed, u, v, false).verdict)
                    ++violations;
            }
    }
    if (violations > 0) outcome.fail("smoothing: " + std::to_string(violations) + " violations");
    return done;
}

int separator_reduction_trials(std::mt19937_64& rng, int target, Outcome& outcome) {
    int done = 0, violations = 0;
    while (done < target) {
        // glue two 2-connected sides on the non-adjacent pair {0,1}
        int n1 = 4 + static_cast<int>(tu::rand_below(rng, 3));
        int n2 = 4 + static_cast<int>(tu::rand_below(rng, 3));
        Graph h1 = tu::random_graph(n1, n1 + static_cast<int>(tu::rand_below(rng, n1)), rng);
        Graph h2 = tu::random_graph(n2, n2 + static_cast<int>(tu::rand_below(rng, n2)), rng);
        if (h1.has_edge(0, 1)) h1 = h1.without_edge(0, 1);
        if (h2.has_edge(0, 1)) h2 = h2.without_edge(0, 1);
        if (!is_k_connected(h1, 2) || !is_k_connected(h2, 2)) continue;

        std::vector<Edge> edges = h1.edges();
        for (const auto& [a, b] : h2.edges()) {
            int ma = a <= 1 ? a : a + n1 - 2;
            int mb = b <= 1 ? b : b + n1 - 2;
            edges.push_back(make_edge(ma, mb));
        }
        Graph g(n1 + n2 - 2, std::move(edges));

        // V0 = one component of G-{0,1} plus the separator itself
        VertexSet rest;
        for (int w = 2; w < g.vertex_count(); ++w) rest.push_back(w);
        MappedGraph removed = induced_subgraph(g, rest);
        auto comps = components(removed.graph);
        VertexSet component;
        for (int w : comps[tu::rand_below(rng, comps.size())])
            component.push_back(removed.to_parent[static_cast<size_t>(w)]);
        std::sort(component.begin(), component.end());
        MappedGraph side = cleave(g, {0, 1}, component);

        // a linked non-adjacent pair inside V0, other than the separator
        VertexSet v0 = side.to_parent;
        std::vector<Edge> candidates;
        for (size_t i = 0; i < v0.size(); ++i)
            for (size_t j = i + 1; j < v0.size(); ++j) {
                int u = v0[i], v = v0[j];
                if (u == 0 && v == 1) continue;
                if (!g.has_edge(u, v) && is_linked2(g, u, v)) candidates.push_back({u, v});
            }
        if (candidates.empty()) continue;
        auto [u, v] = candidates[tu::rand_below(rng, candidates.size())];
        ++done;

        int su = static_cast<int>(std::lower_bound(v0.begin(), v0.end(), u) - v0.begin());
        int sv = static_cast<int>(std::lower_bound(v0.begin(), v0.end(), v) - v0.begin());
        if (classify_pair(g, u, v, false).verdict !=
            classify_pair(side.graph, su, sv, false).verdict)
            ++violations;
    }
    if (violations > 0)
        outcome.fail("2-separator reduction: " + std::to_string(violations) + " violations");
    return done;
}

int contraction_trials(std::mt19937_64& rng, int target, Outcome& outcome) {
    int done = 0, violations = 0;
    while (done < target) {
        int core_n = 5 + static_cast<int>(tu::rand_below(rng, 3));
        Graph core = tu::random_rigid(core_n, static_cast<int>(tu::rand_below(rng, 3)), rng);
        int blob_n = 2 + static_cast<int>(tu::rand_below(rng, 3));
        int n = core_n + blob_n;
        if (n > 10) continue;

        std::vector<Edge> edges = core.edges();
        for (int i = 1; i < blob_n; ++i)  // blob spanning path keeps it connected
            edges.push_back(make_edge(core_n + i - 1, core_n + i));
        int hooks = 1 + static_cast<int>(tu::rand_below(rng, 3));
        std::set<Edge> used;
        for (int i = 0; i < hooks; ++i) {
            int c = static_cast<int>(tu::rand_below(rng, static_cast<uint64_t>(core_n)));
            int b = core_n + static_cast<int>(tu::rand_below(rng, static_cast<uint64_t>(blob_n)));
            if (used.insert(make_edge(c, b)).second) edges.push_back(make_edge(c, b));
        }
        Graph g(n, std::move(edges));

        std::vector<Edge> candidates;
        for (int u = 0; u < core_n; ++u)
            for (int v = u + 1; v < core_n; ++v)
                if (!g.has_edge(u, v)) candidates.push_back({u, v});
        if (candidates.empty()) continue;
        auto [u, v] = candidates[tu::rand_below(rng, candidates.size())];
        ++done;

        VertexSet blob(static_cast<size_t>(blob_n));
        for (int i = 0; i < blob_n; ++i) blob[static_cast<size_t>(i)] = core_n + i;
        ContractedGraph contracted = contract_set(g, blob);
        int cu = contracted.old_to_new[static_cast<size_t>(u)];
        int cv = contracted.old_to_new[static_cast<size_t>(v)];
        if (classify_pair(g, u, v, false).verdict !=
            classify_pair(contracted.graph, cu, cv, false).verdict)
            ++violations;
    }
    if (violations > 0)
        outcome.fail("component contraction: " + std::to_string(violations) + " violations");
    return done;
}

int clique_con_trials(std::mt19937_64& rng, int target, Outcome& outcome) {
    int done = 0, violations = 0;
    while (done < target) {
        int n = 6 + static_cast<int>(tu::rand_below(rng, 5));
        int m = (3 * n + 1) / 2 + static_cast<int>(tu::rand_below(rng, n));
        Graph g = tu::random_3connected(n, m, rng);

        // vertex set of a rigid induced subgraph
        auto parts = maximal_rigid_subgraphs(g);
        const VertexSet& v0 = parts[tu::rand_below(rng, parts.size())];
        ++done;

        bool via_clique = is_globally_rigid2(clique_graph(g, v0).graph).globally_rigid;
        bool via_con = is_globally_rigid2(con_graph(g, v0).graph).globally_rigid;
        if (via_clique != via_con) ++violations;
    }
    if (violations > 0)
        outcome.fail("Clique/Con agreement: " + std::to_string(violations) + " violations");
    return done;
}

Outcome criterion5() {
    Outcome outcome;
    std::mt19937_64 rng(0xabba);
    int a = monotonicity_trials(rng, 500, outcome);
    int b = smoothing_trials(rng, 500, outcome);
    int c = separator_reduction_trials(rng, 500, outcome);
    int d = contraction_trials(rng, 500, outcome);
    int e = clique_con_trials(rng, 500, outcome);
    std::string counts = "instances: monotonicity " + std::to_string(a) + ", smoothing " +
                         std::to_string(b) + ", 2-separator " + std::to_string(c) +
                         ", contraction " + std::to_string(d) + ", clique/con " +
                         std::to_string(e);
    outcome.detail = outcome.detail.empty() ? counts : counts + "; " + outcome.detail;
    return outcome;
}

Outcome criterion6() {
    Outcome outcome;
    if (!is_globally_rigid2(tu::complete_graph(4)).globally_rigid)
        outcome.fail("K4 not reported globally rigid");

    PairClassification k4e = classify_pair(tu::complete_graph(4).without_edge(2, 3), 2, 3);
    if (k4e.verdict != Verdict::GloballyLoose || k4e.reason != PairReason::KappaAtMostTwo)
        outcome.fail("K4-e pair not loose via kappa");

    if (!is_globally_rigid2(tu::wheel(5)).globally_rigid) outcome.fail("W5 not globally rigid");
    std::vector<Edge> expected = {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
    if (weakly_linked_pairs(tu::wheel(5)) != expected)
        outcome.fail("W5 J2 is not the five rim diagonals");

    PairClassification shared = classify_pair(tu::two_k4_sharing_nonadjacent_pair(), 0, 1);
    if (shared.verdict != Verdict::WeaklyGloballyLinked ||
        shared.reason != PairReason::SeparatingPair)
        outcome.fail("shared pair of the two-K4 instance not WGL via SeparatingPair");

    outcome.detail = "K4, K4-e, W5, two-K4 instances";
    return outcome;
}

Outcome criterion7() {
    Outcome outcome;
    std::mt19937_64 rng(0x9e4f);

    // median over 3 random rigid graphs x 3 random pairs per size, so no
    // single lucky or unlucky instance decides the trend
    auto timed_query = [&](int n) {
        std::vector<double> samples;
        for (int graph_index = 0; graph_index < 3; ++graph_index) {
            Graph g = tu::apollonian(n, rng);
            for (int rep = 0; rep < 3; ++rep) {
                int u, v;
                do {
                    u = static_cast<int>(tu::rand_below(rng, static_cast<uint64_t>(n)));
                    v = static_cast<int>(tu::rand_below(rng, static_cast<uint64_t>(n)));
                } while (u == v || g.has_edge(u, v));
                auto start = Clock::now();
                PairClassification pc = classify_pair(g, u, v);
                samples.push_back(seconds_since(start));
                if (pc.verdict == Verdict::Adjacent) outcome.fail("unexpected adjacent verdict");
            }
        }
        std::sort(samples.begin(), samples.end());
        return samples[samples.size() / 2];
    };

    double t1000 = timed_query(1000);
    double t2000 = timed_query(2000);
    double t4000 = timed_query(4000);
    double t5000 = timed_query(5000);

    char buffer[160];
    std::snprintf(buffer, sizeof buffer, "t(1000)=%.3fs t(2000)=%.3fs t(4000)=%.3fs t(5000)=%.3fs",
                  t1000, t2000, t4000, t5000);
    outcome.detail = buffer;

    if (t2000 > 2.0) outcome.fail("pair query at |V|=2000 over 2s");
    if (t5000 > 10.0) outcome.fail("pair query at |V|=5000 over 10s");
    if (t2000 > 5.0 * t1000 && t2000 > 0.05) outcome.fail("1000->2000 growth above 5x");
    if (t4000 > 5.0 * t2000 && t4000 > 0.05) outcome.fail("2000->4000 growth above 5x");
    return outcome;
}

Outcome criterion8() {
    Outcome outcome;
    MgrAuditReport k4 = audit_minimally_globally_rigid(tu::complete_graph(4));
    if (!(k4.applicable && k4.minimal && k4.edge_bound_ok && k4.all_ok))
        outcome.fail("K4 audit failed");
    if (tu::complete_graph(4).edge_count() != 3 * 4 - 6) outcome.fail("K4 bound not tight");

    std::mt19937_64 rng(0x86a1);
    int done = 0, failures = 0;
    while (done < 100) {
        int n = 6 + static_cast<int>(tu::rand_below(rng, 9));
        Graph seed = tu::apollonian(n, rng);
        for (int extra = static_cast<int>(tu::rand_below(rng, 3)); extra > 0; --extra) {
            int a = static_cast<int>(tu::rand_below(rng, static_cast<uint64_t>(n)));
            int b = static_cast<int>(tu::rand_below(rng, static_cast<uint64_t>(n)));
            if (a != b && !seed.has_edge(a, b)) seed = seed.with_edge(a, b);
        }
        Graph minimal = tu::minimize_globally_rigid(seed, rng);
        ++done;
        MgrAuditReport report =
            audit_minimally_globally_rigid(minimal, 20, 0x5eed + static_cast<uint64_t>(done));
        if (!(report.applicable && report.minimal && report.all_ok && report.violations.empty()))
            ++failures;
    }
    if (failures > 0) outcome.fail(std::to_string(failures) + " audits failed");
    outcome.detail = "K4 tight; 100 random minimally-globally-rigid graphs audited";
    return outcome;
}

Outcome criterion9() {
    Outcome outcome;
    auto witness = equivalence_sampler(tu::cycle_graph(4), 0, 2, 2, 100, 0x4c1c);
    if (!witness) {
        outcome.fail("no 4-cycle witness within 100 trials");
    } else {
        if (witness->residual > kSamplerResidualTolerance)
            outcome.fail("witness residual above 1e-10");
        if (witness->distance_gap < kSamplerDistanceGap)
            outcome.fail("witness distance gap below 1e-4");
    }
    if (equivalence_sampler(tu::complete_graph(4), 0, 2, 2, 1000, 0x4b4).has_value())
        outcome.fail("unexpected K4 witness");
    outcome.detail = "4-cycle witness found; K4 silent over 1000 trials";
    return outcome;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    struct Entry {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {1, "oracle equivalence (rank2 == generic_rank on the corpus)", criterion1},
        {2, "global rigidity characterization consistency (independent sides)", criterion2},
        {3, "globally rigid iff all pairs weakly globally linked", criterion3},
        {4, "circuit-choice invariance of the clique-graph verdict", criterion4},
        {5, "transformation invariances (5 x 500 instances)", criterion5},
        {6, "known-instance regressions", criterion6},
        {7, "pair-query performance and quadratic trend", criterion7},
        {8, "minimal-global-rigidity audits", criterion8},
        {9, "equivalence sampler witnesses", criterion9},
    };

    bool all_pass = true;
    for (const Entry& entry : entries) {
        if (!selected.empty() && !selected.count(entry.id)) continue;
        auto start = Clock::now();
        Outcome outcome = entry.run();
        double elapsed = seconds_since(start);
        std::printf("%s criterion %d: %s [%s] (%.1fs)\n", outcome.pass ? "PASS" : "FAIL",
                    entry.id, entry.name, outcome.detail.c_str(), elapsed);
        std::fflush(stdout);
        all_pass &= outcome.pass;
    }
    return all_pass ? 0 : 1;
}
