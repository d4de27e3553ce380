#include <doctest.h>

#include <random>

#include "minorforge/constructions.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/minor.hpp"

using namespace minorforge;

namespace {

MinorModel identity_model(const Graph& g) {
    MinorModel m{g, g, {}};
    for (int v = 0; v < g.n; ++v) {
        VertexSet s(g.n);
        s.set(v);
        m.branch_sets.push_back(s);
    }
    return m;
}

}  // namespace

TEST_CASE("verify_model conditions and witnesses") {
    CHECK(verify_model(identity_model(cycle_graph(4))).ok);

    // Antipodal pairs of C6 are non-adjacent, so the branch sets disconnect.
    MinorModel bad{complete(3), cycle_graph(6), {}};
    for (int v = 0; v < 3; ++v) {
        VertexSet s(6);
        s.set(v);
        s.set(v + 3);
        bad.branch_sets.push_back(s);
    }
    VerifyResult r = verify_model(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.reason == "disconnected branch set");

    MinorModel overlap{complete(2), complete(2), {}};
    VertexSet s0(2);
    s0.set(0);
    overlap.branch_sets = {s0, s0};
    r = verify_model(overlap);
    CHECK_FALSE(r.ok);
    CHECK(r.reason == "overlap");

    MinorModel mismatch{complete(2), complete(2), {s0}};
    CHECK_THROWS_AS(verify_model(mismatch), std::invalid_argument);
}

TEST_CASE("test_minor fixtures") {
    auto m = test_minor(complete(5), petersen());
    REQUIRE(m.has_value());
    CHECK(verify_model(*m).ok);
    CHECK_FALSE(test_minor(complete(6), petersen()).has_value());

    auto empty = test_minor(null_graph(), cycle_graph(5));
    REQUIRE(empty.has_value());
    CHECK(empty->branch_sets.empty());

    CHECK_THROWS_AS(test_minor(complete(3), complete(20)), BudgetExceededError);
}

TEST_CASE("recursive oracle fixtures") {
    // A subdivision contracts back.
    Graph k4sub = build_graph(5, {{4, 0}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(test_minor_oracle2(complete(4), k4sub));

    Graph f2 = construct_sktt_blocker(1, 2, 2).graph;  // friendship graph, two triangles
    CHECK_FALSE(test_minor_oracle2(cycle_graph(4), f2));
    CHECK_FALSE(test_minor(cycle_graph(4), f2).has_value());
}

TEST_CASE("oracle agreement on a seeded sample") {
    std::mt19937_64 rng(444);
    std::uniform_int_distribution<int> gn(2, 7);
    std::uniform_real_distribution<double> pd(0.1, 0.9);
    for (int i = 0; i < 250; ++i) {
        int vg = gn(rng);
        std::uniform_int_distribution<int> hn(1, vg);
        Graph g = random_gnp(vg, pd(rng), rng);
        Graph h = random_gnp(hn(rng), pd(rng), rng);
        auto bb = test_minor(h, g);
        CHECK(bb.has_value() == test_minor_oracle2(h, g));
        if (bb) {
            CHECK(verify_model(*bb).ok);
            // Disjointness corollary and the host-edge budget.
            int used = 0;
            for (const auto& s : bb->branch_sets) used += s.count();
            CHECK(used <= g.n);
            CHECK(model_host_edge_count(*bb) >= h.m);
        }
    }
}

TEST_CASE("minor relation is transitive on a seeded corpus") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> pd(0.3, 0.9);
    for (int i = 0; i < 60; ++i) {
        Graph k = random_gnp(7, pd(rng), rng);
        Graph g = random_gnp(5 + (int)(rng() % 3), pd(rng), rng);
        Graph h = random_gnp(3 + (int)(rng() % 3), pd(rng), rng);
        bool hg = test_minor(h, g).has_value();
        bool gk = test_minor(g, k).has_value();
        if (hg && gk) CHECK(test_minor(h, k).has_value());
    }
}

TEST_CASE("rooted models") {
    RootedSpec adj;
    adj.roots = {{0, 0}, {1, 1}};
    auto m = find_rooted_model(complete(2), complete(4), adj);
    REQUIRE(m.has_value());
    CHECK(m->branch_sets[0].test(0));
    CHECK(m->branch_sets[1].test(1));

    RootedSpec ends;
    ends.roots = {{0, 0}, {1, 4}};
    auto p = find_rooted_model(complete(2), path_graph(5), ends);
    REQUIRE(p.has_value());
    CHECK(verify_model(*p).ok);

    // Three pairwise non-adjacent roots on C6 still admit a triangle model.
    RootedSpec tri;
    tri.roots = {{0, 0}, {1, 2}, {2, 4}};
    auto t = find_rooted_model(complete(3), cycle_graph(6), tri);
    REQUIRE(t.has_value());
    CHECK(verify_model(*t).ok);
    for (auto [hv, gv] : tri.roots) CHECK(t->branch_sets[hv].test(gv));

    // Disjoint rooted paths cannot cross on a path host.
    RootedSpec cross;
    cross.roots = {{0, 0}, {1, 2}, {2, 1}, {3, 3}};
    Graph twok2 = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(find_rooted_model(twok2, path_graph(4), cross).has_value());

    RootedSpec noninj;
    noninj.roots = {{0, 0}, {1, 0}};
    CHECK_THROWS_AS(find_rooted_model(complete(2), complete(3), noninj), std::invalid_argument);
}

TEST_CASE("subgraph isomorphism") {
    CHECK(find_subgraph_iso(complete(3), complete(4)).has_value());
    CHECK_FALSE(find_subgraph_iso(cycle_graph(4), complete(3)).has_value());
    CHECK(find_subgraph_iso(complete_bipartite(2, 2), complete_bipartite(3, 3)).has_value());

    // Pinning and forbidding are honoured.
    VertexSet forb(4);
    forb.set(3);
    auto res = find_subgraph_iso(complete(3), complete(4), forb, {{0, 1}});
    REQUIRE(res.has_value());
    CHECK((*res)[0] == 1);
    for (int v : *res) CHECK(v != 3);
}

TEST_CASE("extend_model_with_paths") {
    // Two end-edges of a path plus the middle as the connecting path.
    Graph h = build_graph(4, {{0, 1}, {2, 3}, {1, 2}});
    Graph hmf = build_graph(4, {{0, 1}, {2, 3}});
    Graph host = path_graph(6);
    MinorModel base{hmf, host, {}};
    for (int v : {0, 1, 4, 5}) {
        VertexSet s(6);
        s.set(v);
        base.branch_sets.push_back(s);
    }
    MinorModel full = extend_model_with_paths(base, h, {{1, 2}}, {{1, 2, 3, 4}});
    CHECK(verify_model(full).ok);
    CHECK(full.pattern.has_edge(1, 2));

    // No F-edges: unchanged.
    MinorModel same = extend_model_with_paths(base, hmf, {}, {});
    CHECK(same.branch_sets == base.branch_sets);

    // Shared interior vertex is rejected.
    Graph h2 = build_graph(4, {{0, 1}, {2, 3}, {1, 2}, {0, 3}});
    Graph star_host = build_graph(7, {{0, 1}, {2, 3}, {4, 5}, {1, 6}, {6, 2}, {0, 6}, {6, 3}});
    MinorModel b2{build_graph(4, {{0, 1}, {2, 3}}), star_host, {}};
    for (int v : {0, 1, 2, 3}) {
        VertexSet s(7);
        s.set(v);
        b2.branch_sets.push_back(s);
    }
    CHECK_THROWS_AS(
        extend_model_with_paths(b2, h2, {{1, 2}, {0, 3}}, {{1, 6, 2}, {0, 6, 3}}),
        PathViolationError);
}

TEST_CASE("search is deterministic run to run") {
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> pd(0.3, 0.8);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_gnp(7, pd(rng), rng);
        Graph h = random_gnp(4, pd(rng), rng);
        auto a = test_minor(h, g);
        auto b = test_minor(h, g);
        CHECK(a.has_value() == b.has_value());
        if (a) CHECK(a->branch_sets == b->branch_sets);
    }
}

TEST_CASE("rooted edge models exist exactly within a component") {
    // Independent oracle: a rooted model of K2 at (a,b) exists iff a and b
    // are distinct vertices of one component (split any connecting path).
    std::mt19937_64 rng(321);
    std::uniform_real_distribution<double> pd(0.1, 0.5);
    for (int i = 0; i < 80; ++i) {
        Graph g = random_gnp(3 + (int)(rng() % 6), pd(rng), rng);
        int a = (int)(rng() % g.n), b = (int)(rng() % g.n);
        if (a == b) continue;
        RootedSpec rs;
        rs.roots = {{0, a}, {1, b}};
        bool found = find_rooted_model(complete(2), g, rs).has_value();
        bool same_comp = component_of(g, a, g.vertex_set()).test(b);
        CHECK(found == same_comp);
    }
}

TEST_CASE("structured hosts with theory-derived verdicts") {
    // The 3-cube: bipartite, planar, Hamiltonian.
    Graph q3 = build_graph(8, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 7}, {6, 7},
                               {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK(test_minor(complete(4), q3).has_value());        // contract a perfect matching
    CHECK(test_minor(cycle_graph(8), q3).has_value());     // Hamiltonian cycle
    CHECK_FALSE(test_minor(complete(5), q3).has_value());  // planar host
    CHECK_FALSE(test_minor(complete_bipartite(3, 3), q3).has_value());
    CHECK(test_minor_oracle2(complete(4), q3));
    CHECK_FALSE(test_minor_oracle2(complete_bipartite(3, 3), q3));

    // Wheels are planar; the rim plus hub gives K4 but never K5.
    Graph wheel(7);
    for (int i = 1; i < 7; ++i) {
        wheel.add_edge(0, i);
        wheel.add_edge(i, i == 6 ? 1 : i + 1);
    }
    CHECK(test_minor(complete(4), wheel).has_value());
    CHECK_FALSE(test_minor(complete(5), wheel).has_value());
    CHECK_FALSE(test_minor_oracle2(complete(5), wheel));

    // Trees have no cycles at all.
    Graph spider = build_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
    CHECK_FALSE(test_minor(cycle_graph(3), spider).has_value());
    CHECK(test_minor(path_graph(5), spider).has_value());
}

TEST_CASE("oracle agreement on structured hosts") {
    std::vector<Graph> hosts;
    hosts.push_back(build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {0, 4},
                                    {1, 5}, {2, 6}, {3, 7}}));  // 2x4 grid
    hosts.push_back(complete_bipartite(2, 4));
    hosts.push_back(build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3},
                                    {1, 4}, {2, 5}}));  // triangular prism
    hosts.push_back(disjoint_union({cycle_graph(4), complete(3)}));
    std::vector<Graph> patterns{path_graph(4),  cycle_graph(4), complete(4),
                                complete_bipartite(2, 3), complete_bipartite(1, 4)};
    for (const Graph& g : hosts)
        for (const Graph& h : patterns) {
            auto bb = test_minor(h, g);
            CHECK(bb.has_value() == test_minor_oracle2(h, g));
            if (bb) CHECK(verify_model(*bb).ok);
        }
}
