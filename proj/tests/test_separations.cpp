#include <doctest.h>

#include <random>

#include "minorforge/errors.hpp"
#include "minorforge/separation.hpp"

using namespace minorforge;

TEST_CASE("dense pair checks") {
    CHECK(is_dense_pair(complete(5), VertexSet(5), 4, 1).ok);

    DensePairCheck r = is_dense_pair(path_graph(5), VertexSet(5), 0, 1);
    CHECK_FALSE(r.ok);
    REQUIRE(r.violation.has_value());
    CHECK(separation_valid(path_graph(5), *r.violation));
    CHECK(r.violation->order() <= 1);

    // K5 plus a pendant vertex, exceptional set = the pendant.
    Graph g = complete(5);
    Graph gp(6);
    for (auto [u, v] : g.edges()) gp.add_edge(u, v);
    gp.add_edge(4, 5);
    VertexSet x(6);
    x.set(5);
    CHECK(is_dense_pair(gp, x, 4, 1).ok);

    CHECK_THROWS_AS(is_dense_pair(complete(3), VertexSet::full(3), 0, 1), XNotProperError);
}

TEST_CASE("dense pair extraction implements the minimal-A step") {
    // No separations at all: the graph itself with empty X.
    ExtractedDensePair k6 = extract_dense_pair(complete(6), 2);
    CHECK(k6.sub.graph.n == 6);
    CHECK(k6.x.empty());

    // Two K5's sharing one vertex: one K5 with the shared vertex as X.
    Graph two(9);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) two.add_edge(i, j);
    for (int i = 4; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j) two.add_edge(i, j);
    ExtractedDensePair shared = extract_dense_pair(two, 1);
    CHECK(shared.sub.graph.n == 5);
    CHECK(shared.sub.graph.m == 10);
    CHECK(shared.x.count() == 1);
    CHECK(shared.sub.new_to_old[shared.x.first()] == 4);
    CHECK(is_dense_pair(shared.sub.graph, shared.x, 4, 1).ok);

    ExtractedDensePair p9 = extract_dense_pair(path_graph(9), 1);
    CHECK(p9.sub.graph.n >= 2);
    CHECK(p9.x.count() <= 2);
    CHECK(is_dense_pair(p9.sub.graph, p9.x, 1, 1).ok);
}

TEST_CASE("extraction conclusion holds over a corpus") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> nd(1, 10);
    std::uniform_real_distribution<double> pd(0.1, 0.9);
    for (int i = 0; i < 80; ++i) {
        Graph g = random_gnp(nd(rng), pd(rng), rng);
        int d = stats(g).min_degree;
        for (int k = 1; k <= 2; ++k) {
            ExtractedDensePair e = extract_dense_pair(g, k);
            CHECK(e.x.count() <= 2 * k);
            CHECK(is_dense_pair(e.sub.graph, e.x, d, k).ok);
        }
    }
}

TEST_CASE("connectivity") {
    CHECK(connectivity(petersen()) == 3);
    CHECK(connectivity(cycle_graph(5)) == 2);
    CHECK(connectivity(complete(7)) == 6);
    CHECK(connectivity(path_graph(2)) == 1);
    CHECK(connectivity(disjoint_union({complete(3), complete(3)})) == 0);
}

TEST_CASE("menger alternatives") {
    // Fully disjoint paths share no vertex at all, so singleton terminals
    // carry at most one path and the cut side fires at l = 2.
    VertexSet u(4), w(4);
    u.set(0);
    w.set(2);
    MengerResult one = menger_paths(cycle_graph(4), u, w, 1);
    CHECK(one.paths.size() == 1);
    MengerResult r = menger_paths(cycle_graph(4), u, w, 2);
    REQUIRE(r.separation.has_value());
    CHECK(r.separation->order() <= 1);
    CHECK(menger_pair_valid(cycle_graph(4), *r.separation, u, w));

    VertexSet pu(5), pw(5);
    pu.set(0);
    pw.set(4);
    MengerResult s = menger_paths(path_graph(5), pu, pw, 2);
    REQUIRE(s.separation.has_value());
    CHECK(s.separation->order() <= 1);
    CHECK(menger_pair_valid(path_graph(5), *s.separation, pu, pw));

    Graph k33 = complete_bipartite(3, 3);
    VertexSet a(6), b(6);
    for (int i = 0; i < 3; ++i) a.set(i);
    for (int i = 3; i < 6; ++i) b.set(i);
    MengerResult t = menger_paths(k33, a, b, 3);
    CHECK(t.paths.size() == 3);

    CHECK_THROWS_AS(menger_paths(complete(3), VertexSet(3), a, 1), PreconditionError);
}

TEST_CASE("balanced separators") {
    auto p9 = balanced_separator(path_graph(9));
    REQUIRE(p9.has_value());
    CHECK(p9->order() == 1);
    CHECK(p9->A.count() <= 6);
    CHECK(p9->B.count() <= 6);
    CHECK(separation_valid(path_graph(9), *p9));

    CHECK_FALSE(balanced_separator(complete(6)).has_value());

    Graph grid = build_graph(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {0, 3}, {3, 6},
                                 {1, 4}, {4, 7}, {2, 5}, {5, 8}});
    auto gr = balanced_separator(grid);
    REQUIRE(gr.has_value());
    CHECK(gr->order() <= 3);
    CHECK(separation_valid(grid, *gr));
}

TEST_CASE("menger returns exactly one alternative") {
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> pd(0.2, 0.7);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_gnp(3 + (int)(rng() % 6), pd(rng), rng);
        VertexSet u(g.n), w(g.n);
        u.set(rng() % g.n);
        w.set(rng() % g.n);
        for (int l = 1; l <= 3; ++l) {
            MengerResult r = menger_paths(g, u, w, l);
            CHECK(r.paths.empty() == r.separation.has_value());
        }
    }
}

TEST_CASE("overlapping terminals become zero-length paths") {
    VertexSet u(4), w(4);
    u.set(0);
    u.set(1);
    w.set(1);
    w.set(2);
    MengerResult r = menger_paths(complete(4), u, w, 2);
    REQUIRE(r.separation == std::nullopt);
    bool saw_zero = false;
    for (const auto& p : r.paths) saw_zero |= (p.size() == 1 && p[0] == 1);
    CHECK(saw_zero);
}
