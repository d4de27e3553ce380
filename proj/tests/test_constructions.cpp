#include <doctest.h>

#include "minorforge/canonical.hpp"
#include "minorforge/constructions.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/minor.hpp"

using namespace minorforge;

TEST_CASE("sk7 blocker") {
    Sk7Blocker b = construct_sk7_blocker(1);
    CHECK(is_isomorphic(b.graph, complete_multipartite({3, 3, 3})));
    CHECK(b.delta_recomputed == 6);
    CHECK(b.delta_target == Rational(16, 3));
    CHECK_FALSE(test_minor(complete(7), b.graph).has_value());
    CHECK_FALSE(test_minor_oracle2(complete(7), b.graph));
    auto k6 = test_minor(complete(6), b.graph);
    REQUIRE(k6.has_value());
    CHECK(verify_model(*k6).ok);
}

TEST_CASE("sktt blocker closed forms and minors") {
    SkttBlocker f3 = construct_sktt_blocker(1, 2, 3);
    CHECK(f3.graph.n == 7);
    CHECK(f3.graph.m == 9);
    CHECK(f3.v_closed_form == 7);
    CHECK(f3.e_closed_form == 9);
    CHECK_FALSE(test_minor(complete_bipartite(2, 2), f3.graph).has_value());
    CHECK_FALSE(test_minor_oracle2(complete_bipartite(2, 2), f3.graph));

    SkttBlocker g224 = construct_sktt_blocker(2, 2, 4);
    CHECK(g224.graph.n == 11);
    CHECK(g224.graph.m == g224.e_closed_form);
    Graph two_k22 = disjoint_union({complete_bipartite(2, 2), complete_bipartite(2, 2)});
    CHECK_FALSE(test_minor(two_k22, g224.graph).has_value());
    // A single K_{2,2} does fit (the bound is tight).
    CHECK(test_minor(complete_bipartite(2, 2), g224.graph).has_value());
}

TEST_CASE("kst blocker") {
    KstBlocker b16 = construct_kst_blocker(1, 6, 5);
    CHECK(b16.graph.n == 6);
    CHECK(b16.d == 2);
    CHECK(b16.delta_recomputed == 3);       // v - d - 1
    CHECK_FALSE(b16.regime_ok);             // 3 < 2+6-2*sqrt(2)-2, regime warning path
    CHECK(girth(b16.regular_core) > (int)b16.girth_required);

    KstBlocker b26 = construct_kst_blocker(2, 6, 5);
    CHECK(b26.graph.n == 8);
    CHECK(b26.delta_recomputed == 8 - b26.d - 1);
    CHECK_FALSE(test_minor(complete_bipartite(2, 6), b26.graph).has_value());
    CHECK_FALSE(test_minor_oracle2(complete_bipartite(2, 6), b26.graph));
}

TEST_CASE("bipartite expansion formulas") {
    BipartiteExpansion k3 = bipartite_expand(complete(3), 3);
    CHECK(k3.graph.n == 18);  // 4*3/1 + 2*3
    CHECK(k3.bound_is_equality);
    CHECK(verify_model(k3.witness).ok);

    BipartiteExpansion k2 = bipartite_expand(complete(2), 3);
    CHECK(k2.graph.n == 8);  // 4*1 + 2*2
    CHECK(k2.bound_is_equality);

    BipartiteExpansion pet = bipartite_expand(petersen(), 3);
    CHECK(pet.graph.n == 80);
    GraphStats s = stats(pet.graph);
    CHECK(s.is_bipartite);
    CHECK(s.max_degree <= 3);
    CHECK(verify_model(pet.witness).ok);

    CHECK_THROWS_AS(bipartite_expand(complete(3), 2), PreconditionError);
}

TEST_CASE("falsification harness") {
    FalsifyResult p3 = ha_falsify(path_graph(3), 6, FalsifySource::AllSmallGraphs);
    CHECK_FALSE(p3.counterexample.has_value());
    CHECK(p3.candidates_checked > 0);

    FalsifyResult k7 = ha_falsify(complete(7), 16, FalsifySource::ConstructionsOnly);
    REQUIRE(k7.counterexample.has_value());
    CHECK(is_isomorphic(*k7.counterexample, complete_multipartite({3, 3, 3})));
    CHECK(stats(*k7.counterexample).min_degree == 6);

    // External corpus path.
    std::vector<Graph> corpus{complete(4), complete_multipartite({3, 3, 3})};
    FalsifyResult viaCorpus = ha_falsify(complete(7), 9, FalsifySource::AllSmallGraphs, &corpus);
    REQUIRE(viaCorpus.counterexample.has_value());
    CHECK(viaCorpus.counterexample->n == 9);
}
