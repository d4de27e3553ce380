#include <doctest.h>

#include "minorforge/embedding.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/minor.hpp"

using namespace minorforge;

TEST_CASE("min_B_bipartition") {
    Bipartition c6 = min_B_bipartition(cycle_graph(6));
    CHECK(c6.A.count() == 3);
    CHECK(c6.B.count() == 3);

    // Star plus an edge: best split is 2 against 4 (exhaustive over the
    // four sign choices: |A| can only be 2 or 4, and 4 > floor(6/2)).
    Graph g = disjoint_union({complete_bipartite(1, 3), complete(2)});
    Bipartition b = min_B_bipartition(g);
    CHECK(b.A.count() == 2);
    CHECK(b.B.count() == 4);
    for (auto [u, v] : g.edges()) CHECK(b.A.test(u) != b.A.test(v));

    Bipartition e5 = min_B_bipartition(edgeless(5));
    CHECK(e5.A.count() == 2);
    CHECK(e5.B.count() == 3);
    CHECK(e5.A.test(0));
    CHECK(e5.A.test(1));

    CHECK_THROWS_AS(min_B_bipartition(complete(3)), NotBipartiteError);
}

TEST_CASE("hall_embed on matchings") {
    Graph h(8);
    for (int i = 0; i < 4; ++i) h.add_edge(2 * i, 2 * i + 1);

    VertexSet x(8);
    x.set(0);
    std::vector<int> phi = hall_embed(h, 1, complete(8), x);
    std::vector<char> used(8, 0);
    for (int v : phi) {
        CHECK_FALSE(used[v]);
        used[v] = 1;
    }
    for (auto [a, b] : h.edges()) CHECK(complete(8).has_edge(phi[a], phi[b]));

    std::vector<int> phi2 = hall_embed(h, 1, complete(8), VertexSet(8));
    for (auto [a, b] : h.edges()) CHECK(complete(8).has_edge(phi2[a], phi2[b]));
}

TEST_CASE("hall_embed precondition arithmetic") {
    // v(g)=9 exceeds (1+1/24)*8-1, so the size inequality must fire.
    Graph host = complete(9);
    for (int i = 0; i < 4; ++i) {
        host.adj[2 * i].reset(2 * i + 1);
        host.adj[2 * i + 1].reset(2 * i);
        --host.m;
    }
    CHECK_THROWS_AS(hall_embed(cycle_graph(8), 2, host, VertexSet(9)), PreconditionError);
    CHECK_THROWS_AS(hall_embed(complete(3), 2, complete(4), VertexSet(4)), NotBipartiteError);
}

TEST_CASE("greedy_forest_embed") {
    auto star = greedy_forest_embed(complete_bipartite(1, 3), complete(5), VertexSet(5));
    CHECK(star.size() == 4);

    auto ham = greedy_forest_embed(path_graph(4), cycle_graph(4), VertexSet(4));
    for (size_t i = 0; i + 1 < ham.size(); ++i) CHECK(cycle_graph(4).has_edge(ham[i], ham[i + 1]));

    CHECK_THROWS_AS(
        greedy_forest_embed(build_graph(4, {{0, 1}, {2, 3}}), complete(3), VertexSet(3)),
        StuckNoUnusedNeighbourError);
    CHECK_THROWS_AS(greedy_forest_embed(cycle_graph(3), complete(4), VertexSet(4)),
                    PreconditionError);
}

TEST_CASE("pack_components") {
    Graph h3 = disjoint_union({complete(3), complete(3), complete(3)});
    PackResult all = pack_components(h3, complete(9), 9);
    CHECK(all.packed_components.size() == 3);
    CHECK(all.used_host.count() == 9);
    CHECK(all.g0.n == all.h0.n);

    PackResult two = pack_components(h3, complete(9), 7);
    CHECK(two.packed_components.size() == 2);
    CHECK(two.used_host.count() == 6);

    // Petersen has girth 5, so no 4-cycle packs at all.
    Graph h2c4 = disjoint_union({cycle_graph(4), cycle_graph(4)});
    PackResult none = pack_components(h2c4, petersen(), 10);
    CHECK(none.packed_components.empty());
    CHECK(none.used_host.empty());
}

TEST_CASE("packing is maximal and spanning") {
    Graph h = disjoint_union({cycle_graph(4), complete(3), complete(3)});
    Graph host = complete(7);
    int cap = 6;
    PackResult r = pack_components(h, host, cap);
    // Spanning: the embedding hits every used host vertex.
    CHECK(r.g0.n == r.h0.n);
    for (int v = 0; v < h.n; ++v)
        if (r.packed_vertices.test(v)) CHECK(r.used_host.test(r.phi[v]));
    // Maximality: nothing else fits under the cap.
    auto comps = components(h);
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        bool packed = false;
        for (int pc : r.packed_components) packed |= (pc == (int)ci);
        if (packed) continue;
        if (r.used_host.count() + comps[ci].count() > cap) continue;
        MappedSubgraph comp = subgraph_induced_mapped(h, comps[ci]);
        CHECK_FALSE(find_subgraph_iso(comp.graph, host, r.used_host, {}).has_value());
    }
}

TEST_CASE("hall_embed survives adversarial Y_v overlap") {
    // 36 disjoint 3-stars (144 vertices), host = complete graph on the
    // non-exceptional side plus two exceptional vertices whose neighbourhood
    // structure punishes greedy round-by-round matching: N(0) ∩ Y has
    // exactly 3 vertices nested inside N(1) ∩ Y of exactly 6. The disjoint
    // 3-sets Y_v exist, but only a matching over all 3 demands per vertex
    // simultaneously is guaranteed to find them.
    std::vector<Graph> stars(36, complete_bipartite(1, 3));
    Graph h = disjoint_union(stars);
    REQUIRE(h.n == 144);

    Graph g(146);
    for (int u = 2; u < 146; ++u)
        for (int v = u + 1; v < 146; ++v) g.add_edge(u, v);
    for (int y : {2, 3, 4}) g.add_edge(0, y);
    for (int y : {2, 3, 4, 5, 6, 7}) g.add_edge(1, y);
    VertexSet x(146);
    x.set(0);
    x.set(1);

    std::vector<int> phi = hall_embed(h, 3, g, x);
    std::vector<char> used(g.n, 0);
    for (int v = 0; v < h.n; ++v) {
        CHECK_FALSE(used[phi[v]]);
        used[phi[v]] = 1;
    }
    for (auto [a, b] : h.edges()) CHECK(g.has_edge(phi[a], phi[b]));
}
