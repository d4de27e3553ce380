#include <doctest.h>

#include <random>

#include "minorforge/json_io.hpp"

using namespace minorforge;

TEST_CASE("graph json round-trip") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    for (int n : {0, 1, 6, 13}) {
        Graph g = random_gnp(n, pd(rng), rng);
        g.label = "fixture";
        Graph back = graph_from_json(graph_to_json(g));
        CHECK(back == g);
        CHECK(back.label == g.label);
    }
}

TEST_CASE("model json round-trip and key order stability") {
    auto m = test_minor(complete(4), petersen());
    REQUIRE(m.has_value());
    nlohmann::json j = model_to_json(*m);
    MinorModel back = model_from_json(j);
    CHECK(back.pattern == m->pattern);
    CHECK(back.host == m->host);
    CHECK(back.branch_sets == m->branch_sets);
    CHECK(j.dump() == model_to_json(*m).dump());
}

TEST_CASE("separation json schema") {
    Separation s;
    s.A = VertexSet::of(4, {0, 1});
    s.B = VertexSet::of(4, {1, 2, 3});
    nlohmann::json j = separation_to_json(s);
    CHECK(j["order"] == 1);
    CHECK(j["A"].size() == 2);
    CHECK(j["B"].size() == 3);
}
