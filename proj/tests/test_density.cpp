#include <doctest.h>

#include "minorforge/density.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/separation.hpp"

using namespace minorforge;

TEST_CASE("prune_high_degree") {
    PruneResult c5 = prune_high_degree(cycle_graph(5), 2, Rational(1, 10));
    CHECK(c5.removed.empty());
    CHECK(c5.sub.graph.n == 5);

    PruneResult k6 = prune_high_degree(complete(6), 5, Rational(1, 10));
    CHECK(k6.removed.empty());

    // Star-heavy graph fails the minimum-degree precondition.
    Graph star = disjoint_union({complete(2), complete(2), complete(2), complete(2)});
    Graph g(9);
    for (auto [u, v] : star.edges()) g.add_edge(u, v);
    for (int v = 0; v < 8; ++v) g.add_edge(8, v);
    CHECK_THROWS_AS(prune_high_degree(g, 4, Rational(1)), PreconditionError);
}

TEST_CASE("pruning meets its advertised bounds on a hypothesis instance") {
    // Ten 10-cycles plus one hub adjacent to 20 cycle vertices: delta = 2,
    // d = 120/101 <= (1+eps)*D/2 for eps = 0.2 (gamma=0.8, alpha=1, beta=0.2).
    std::vector<Graph> cycles(10, cycle_graph(10));
    Graph base = disjoint_union(cycles);
    Graph g(101);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    for (int i = 0; i < 20; ++i) g.add_edge(100, 5 * i);
    int D = 2;
    Rational alpha(1), gamma(4, 5), beta(1, 5);
    Rational eps = std::min(gamma / (Rational(2) * (Rational(1) + Rational(1) / alpha)),
                            alpha * beta);
    REQUIRE(Rational(g.m, g.n) <= (Rational(1) + eps) * Rational(D, 2));

    PruneResult r = prune_high_degree(g, D, alpha);
    CHECK(stats(r.sub.graph).max_degree <= 4);  // (1+alpha)D
    CHECK(Rational(r.removed.count()) <= (eps / alpha) * Rational(g.n));
    CHECK(Rational(r.sub.graph.n) >= (Rational(1) - beta) * Rational(g.n));
    CHECK(r.density_after >= (Rational(1) - gamma) * Rational(D, 2));
}

TEST_CASE("dense_step outcomes") {
    // Dense host with the hypothesis d >= 2/eps satisfied: d(K20) = 19/2,
    // eps = 1/4. Some small dense subgraph qualifies.
    IncrementOutcome k20 = dense_step(complete(20), Rational(1, 4));
    REQUIRE(k20.tag == IncrementOutcome::Tag::Pieces);
    const Piece& p = k20.pieces[0];
    CHECK(Rational(p.subgraph.n) <= Rational(19, 2) / (Rational(2) * Rational(1, 4)));
    CHECK(Rational(p.subgraph.m, p.subgraph.n) >= Rational(1, 4) * Rational(19, 2));

    // Hypothesis failure is an honest value, not an error; d(K20) = 9.5
    // sits below 2/eps = 20 for eps = 1/10.
    CHECK(dense_step(complete(20), Rational(1, 10)).tag == IncrementOutcome::Tag::Inconclusive);
    IncrementOutcome cyc = dense_step(cycle_graph(30), Rational(2, 5));
    CHECK(cyc.tag == IncrementOutcome::Tag::Inconclusive);

    // Exact enumeration branch on a small host.
    IncrementOutcome k13 = dense_step(complete(13), Rational(7, 20));
    REQUIRE(k13.tag == IncrementOutcome::Tag::Pieces);
    CHECK(Rational(k13.pieces[0].subgraph.m, k13.pieces[0].subgraph.n) >=
          Rational(7, 20) * Rational(6));
}

TEST_CASE("extract_pieces on a dense host") {
    ExtractResult r = extract_pieces(complete(40), 20, 2, Rational(1, 10), Rational(1, 5));
    REQUIRE(r.outcome.tag == IncrementOutcome::Tag::Pieces);
    REQUIRE(r.outcome.pieces.size() == 2);
    CHECK_FALSE(r.outcome.pieces[0].host_vertices.intersects(r.outcome.pieces[1].host_vertices));
    for (const Piece& p : r.outcome.pieces) {
        CHECK(Rational(p.subgraph.n) <= Rational(20) / Rational(1, 10));
        CHECK(Rational(p.subgraph.m, p.subgraph.n) >= Rational(1, 10) * Rational(20));
    }
    CHECK(r.ledger.size() >= 3);  // prune + two rounds

    ExtractResult empty = extract_pieces(complete(10), 9, 0, Rational(1, 10), Rational(1, 5));
    CHECK(empty.outcome.tag == IncrementOutcome::Tag::Pieces);
    CHECK(empty.outcome.pieces.empty());

    CHECK_THROWS_AS(extract_pieces(path_graph(5), 4, 1, Rational(1, 10), Rational(1, 5)),
                    PreconditionError);
}

TEST_CASE("mader_subgraph") {
    MappedSubgraph k5 = mader_subgraph(complete(5));
    CHECK(k5.graph.n == 5);
    CHECK(connectivity(k5.graph) == 4);

    Graph two(9);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) two.add_edge(i, j);
    for (int i = 4; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j) two.add_edge(i, j);
    MappedSubgraph half = mader_subgraph(two);
    CHECK(half.graph.n == 5);
    CHECK(half.graph.m == 10);
    CHECK(connectivity(half.graph) >= 2);  // ceil(d/2) = ceil(20/18) = 2

    // Any tree already meets kappa >= ceil(d/2) = 1.
    MappedSubgraph tree = mader_subgraph(path_graph(7));
    CHECK(connectivity(tree.graph) >= 1);

    CHECK_THROWS_AS(mader_subgraph(edgeless(3)), PreconditionError);
}
