#include <random>

#include "doctest.h"
#include "rigidlink/graph.hpp"
#include "rigidlink/graph_io.hpp"
#include "testutil.hpp"

using namespace rigidlink;
namespace tu = rigidlink::testutil;

TEST_CASE("graph construction enforces invariants") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);

    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(g.neighbors(0) == std::vector<int>{1, 2});
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(validate_graph(g));
}

TEST_CASE("labels resolve both ways") {
    Graph g(2, {{0, 1}}, {{0, "left"}, {1, "right"}});
    CHECK(g.vertex_by_label("right") == 1);
    CHECK_FALSE(g.vertex_by_label("missing").has_value());
    CHECK_THROWS_AS(Graph(1, {}, {{3, "x"}}), PreconditionError);
}

TEST_CASE("contract_set merges onto the smallest id and re-densifies") {
    // K4 contracted along an edge is a triangle
    ContractedGraph k3 = contract_set(tu::complete_graph(4), {0, 1});
    CHECK(k3.graph == tu::complete_graph(3));
    CHECK(k3.old_to_new == std::vector<int>{0, 0, 1, 2});

    // path 0-1-2 with the two ends merged becomes a single edge
    ContractedGraph e = contract_set(tu::path_graph(3), {0, 2});
    CHECK(e.graph == Graph(2, {{0, 1}}));

    // 4-cycle contracted along a diagonal: two parallel edges collapse,
    // giving a path with 2 edges on 3 vertices
    ContractedGraph c = contract_set(tu::cycle_graph(4), {0, 2});
    CHECK(c.graph.vertex_count() == 3);
    CHECK(c.graph.edge_count() == 2);
    CHECK(validate_graph(c.graph));

    CHECK_THROWS_AS(contract_set(tu::path_graph(3), {}), PreconditionError);
}

TEST_CASE("contract_edge requires the edge") {
    CHECK(contract_edge(tu::complete_graph(4), 0, 1).graph == tu::complete_graph(3));
    CHECK(contract_edge(tu::complete_graph(3), 1, 2).graph == Graph(2, {{0, 1}}));
    CHECK_THROWS_AS(contract_edge(tu::cycle_graph(4), 0, 2), PreconditionError);

    // K33 with one edge contracted: 5 vertices, 8 edges after simplification
    ContractedGraph g = contract_edge(tu::complete_bipartite(3, 3), 0, 3);
    CHECK(g.graph.vertex_count() == 5);
    CHECK(g.graph.edge_count() == 8);
}

TEST_CASE("iterated contractions compose") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(tu::rand_below(rng, 3));
        Graph g = tu::random_connected_graph(n, n + 3, rng);
        // A,B overlapping: contracting A then the image of B matches A∪B.
        VertexSet a = {0, 1, 2};
        VertexSet b = {2, 3};
        ContractedGraph first = contract_set(g, a);
        VertexSet image;
        for (int v : b) image.push_back(first.old_to_new[static_cast<size_t>(v)]);
        ContractedGraph second = contract_set(first.graph, image);
        ContractedGraph direct = contract_set(g, {0, 1, 2, 3});
        CHECK(tu::graphs_isomorphic(second.graph, direct.graph));
    }
}

TEST_CASE("clique_graph keeps X and completes component neighborhoods") {
    // K4 plus a pendant vertex: the pendant's neighborhood is a single
    // vertex, so no new edge appears.
    Graph g = tu::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    MappedGraph clq = clique_graph(g, {0, 1, 2, 3});
    CHECK(clq.graph == tu::complete_graph(4));
    CHECK(clq.to_parent == VertexSet{0, 1, 2, 3});

    // one deleted component with a 2-vertex neighborhood gains an edge
    Graph h = tu::from_edges(5, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 4}});
    MappedGraph added = clique_graph(h, {0, 1, 2});
    CHECK(added.graph == tu::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("con_graph contracts each outside component") {
    Graph star = tu::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    ContractedGraph con = con_graph(star, {0});
    CHECK(con.graph == star);  // leaves are singleton components

    Graph g = tu::cycle_graph(6);
    ContractedGraph c = con_graph(g, {0, 3});
    // both arcs collapse to single vertices adjacent to 0 and 3
    CHECK(c.graph.vertex_count() == 4);
    CHECK(c.graph.edge_count() == 4);

    ContractedGraph all = con_graph(g, {0, 1, 2, 3, 4, 5});
    CHECK(all.graph == g);
}

TEST_CASE("clique and con on a 9-vertex instance match hand computation") {
    // X = {0,1,2,3}; components outside: {4,5} with neighborhood {0,1},
    // {6} with neighborhood {1,2,3}, {7,8} with neighborhood {3}.
    Graph g = tu::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {1, 5},
                                 {1, 6}, {2, 6}, {3, 6}, {3, 7}, {7, 8}});
    VertexSet x = {0, 1, 2, 3};

    MappedGraph clq = clique_graph(g, x);
    CHECK(clq.graph == tu::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}));

    ContractedGraph con = con_graph(g, x);
    // vertex count: |X| + number of outside components
    CHECK(con.graph.vertex_count() == 4 + 3);
    CHECK(con.graph ==
          tu::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {3, 6}}));
}

TEST_CASE("clique_sum glues along cliques") {
    Graph triangle = tu::complete_graph(3);
    Graph k4_minus = clique_sum(triangle, triangle, {{0, 0}, {1, 1}});
    CHECK(k4_minus.vertex_count() == 4);
    CHECK(k4_minus.edge_count() == 5);

    Graph two_k4 = clique_sum(tu::complete_graph(4), tu::complete_graph(4),
                              {{0, 0}, {1, 1}, {2, 2}});
    CHECK(two_k4.vertex_count() == 5);
    CHECK(two_k4.edge_count() == 9);

    Graph k4_k3 = clique_sum(tu::complete_graph(4), tu::complete_graph(3), {{0, 0}});
    CHECK(k4_k3.vertex_count() == 6);
    CHECK(k4_k3.edge_count() == 9);

    Graph no_clique = tu::path_graph(3);
    CHECK_THROWS_AS(clique_sum(no_clique, triangle, {{0, 0}, {2, 1}}), PreconditionError);
}

TEST_CASE("components, neighbors_of_set, induced") {
    Graph two_edges = tu::from_edges(4, {{0, 1}, {2, 3}});
    auto comps = components(two_edges);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1});
    CHECK(comps[1] == VertexSet{2, 3});

    CHECK(neighbors_of_set(tu::path_graph(3), {1}) == VertexSet{0, 2});
    CHECK(induced_subgraph(tu::complete_graph(4), {0, 1, 2}).graph == tu::complete_graph(3));
}

TEST_CASE("derived graphs always satisfy the invariants") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 4 + static_cast<int>(tu::rand_below(rng, 5));
        int m = std::min(n * (n - 1) / 2, 1 + static_cast<int>(tu::rand_below(rng, 2ull * n)));
        Graph g = tu::random_graph(n, m, rng);
        VertexSet x;
        for (int v = 0; v < n; ++v)
            if (tu::rand_below(rng, 2)) x.push_back(v);
        if (x.empty()) x.push_back(static_cast<int>(tu::rand_below(rng, n)));

        CHECK(validate_graph(induced_subgraph(g, x).graph));
        CHECK(validate_graph(contract_set(g, x).graph));
        CHECK(validate_graph(clique_graph(g, x).graph));
        CHECK(validate_graph(con_graph(g, x).graph));

        // vertex set of Clique(G,X) is X; |V(Con)| = |X| + #components of G-X
        CHECK(clique_graph(g, x).to_parent == normalize_vertex_set(g, x));
        VertexSet rest;
        for (int v = 0; v < n; ++v)
            if (!std::binary_search(x.begin(), x.end(), v)) rest.push_back(v);
        size_t outside = rest.empty() ? 0 : components(induced_subgraph(g, rest).graph).size();
        CHECK(con_graph(g, x).graph.vertex_count() ==
              static_cast<int>(normalize_vertex_set(g, x).size() + outside));
    }
}
