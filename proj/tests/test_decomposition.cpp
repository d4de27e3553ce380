#include <doctest.h>

#include <random>

#include "minorforge/canonical.hpp"
#include "minorforge/decomposition.hpp"
#include "minorforge/errors.hpp"

using namespace minorforge;

TEST_CASE("bounded_decomposition shapes") {
    Decomposition p10 = bounded_decomposition(path_graph(10), 4);
    CHECK(decomposition_valid(p10, path_graph(10)));
    for (const auto& b : p10.bags) CHECK(b.count() <= 4);
    // Separators on a path are single vertices, so each split replicates
    // exactly one vertex: excess = number of bags - 1.
    CHECK(decomposition_excess(p10, path_graph(10)) == (long long)p10.bags.size() - 1);

    Decomposition k3 = bounded_decomposition(complete(3), 3);
    CHECK(k3.bags.size() == 1);
    CHECK(decomposition_excess(k3, complete(3)) == 0);

    CHECK_THROWS_AS(bounded_decomposition(complete(5), 3), NoSeparatorSmallEnoughError);
    CHECK_THROWS_AS(bounded_decomposition(path_graph(3), 1), PreconditionError);
}

TEST_CASE("expansion of a path with two bags") {
    Graph p3 = path_graph(3);
    Decomposition d;
    d.C = 2;
    d.bags = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {1, 2})};
    ExpansionResult ex = expand_for_component_size(p3, d);
    CHECK(ex.h_prime.n == 4);
    REQUIRE(ex.f_edges.size() == 1);
    CHECK(ex.copy_paths.at(1).size() == 2);
    CHECK(verify_model(ex.contraction_witness).ok);

    // Removing F leaves two disjoint edges.
    Graph rem = ex.h_prime;
    auto [fu, fv] = ex.f_edges[0];
    rem.adj[fu].reset(fv);
    rem.adj[fv].reset(fu);
    --rem.m;
    CHECK(is_isomorphic(rem, disjoint_union({complete(2), complete(2)})));
}

TEST_CASE("expansion handles isolated vertices") {
    Graph e3 = edgeless(3);
    Decomposition d = bounded_decomposition(e3, 3);
    ExpansionResult ex = expand_for_component_size(e3, d);
    CHECK(ex.h_prime.n == 3);
    CHECK(ex.f_edges.empty());
    CHECK(ex.h_prime.m == 0);
}

TEST_CASE("expansion invariants over a corpus") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> nd(2, 11);
    std::uniform_real_distribution<double> pd(0.05, 0.35);
    int runs = 0;
    for (int i = 0; i < 120 && runs < 60; ++i) {
        Graph h = random_gnp(nd(rng), pd(rng), rng);
        for (int cc : {3, 4}) {
            Decomposition dec;
            try {
                dec = bounded_decomposition(h, cc);
            } catch (const NoSeparatorSmallEnoughError&) {
                continue;
            }
            ExpansionResult ex = expand_for_component_size(h, dec);
            ++runs;
            CHECK(verify_model(ex.contraction_witness).ok);
            CHECK(h.n <= ex.h_prime.n);
            CHECK(stats(ex.h_prime).max_degree <= stats(h).max_degree + 2);
            CHECK((long long)ex.f_edges.size() == decomposition_excess(dec, h));
            CHECK((long long)ex.f_edges.size() == ex.h_prime.n - h.n);
            if (stats(h).is_bipartite) {
                Graph rem = ex.h_prime;
                for (auto [u, v] : ex.f_edges) {
                    rem.adj[u].reset(v);
                    rem.adj[v].reset(u);
                    --rem.m;
                }
                CHECK(stats(rem).is_bipartite);
            }
        }
    }
    CHECK(runs >= 30);
}

TEST_CASE("invalid decompositions are rejected") {
    Graph p3 = path_graph(3);
    Decomposition uncovered;
    uncovered.C = 2;
    uncovered.bags = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {2})};
    CHECK_THROWS_AS(expand_for_component_size(p3, uncovered), InvalidDecompositionError);

    // A vertex with edges must appear in some bag.
    Decomposition missing;
    missing.C = 3;
    missing.bags = {VertexSet::of(3, {0, 1})};
    CHECK_THROWS_AS(expand_for_component_size(p3, missing), InvalidDecompositionError);
}
