#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/minor.hpp"
#include "minorforge/rational.hpp"

namespace minorforge {

// Complement of a regular high-girth graph; blocks complete-bipartite
// minors in the asymptotic regime. Below-regime parameters still build and
// are flagged.
struct KstBlocker {
    Graph graph;
    Graph regular_core;  // the d-regular high-girth graph G'
    int d = 0;
    long long girth_required = 0;
    int delta_recomputed = 0;
    double delta_target = 0;  // 2s + t - 2*sqrt(2s) - 2
    bool regime_ok = false;
};
KstBlocker construct_kst_blocker(int s, int t, uint64_t seed);

// Complete 3-partite blocker for disjoint complete minors.
struct Sk7Blocker {
    Graph graph;  // K_{t,t,t}
    int part_size = 0;
    int delta_recomputed = 0;
    Rational delta_target{0, 1};  // 22s/3 - 2
};
Sk7Blocker construct_sk7_blocker(int s);

// Bounded-degree bipartite expansion with a contraction witness.
struct BipartiteExpansion {
    Graph graph;  // H'
    VertexSet side_a, side_b;
    std::vector<int> k_of;        // per h-vertex path length parameter
    MinorModel witness;           // model of h in H' (paths contracted)
    long long size_bound = 0;     // 4e(h)/(D-2) + 2v(h) when integral
    bool bound_is_equality = false;
};
BipartiteExpansion bipartite_expand(const Graph& h, int max_degree);

// Cliques plus universal vertices; dense on average but repeated
// complete-bipartite minors exhaust the universal set.
struct SkttBlocker {
    Graph graph;  // G(s,t,k)
    long long v_closed_form = 0;
    long long e_closed_form = 0;
};
SkttBlocker construct_sktt_blocker(int s, int t, int k);

enum class FalsifySource { AllSmallGraphs, ConstructionsOnly };

struct FalsifyResult {
    std::optional<Graph> counterexample;
    long long candidates_checked = 0;
};

// Searches for a non-null G with delta(G) >= v(h)-1 and no h minor. The
// all-graphs source enumerates canonical graphs up to max_n (or an external
// corpus); the constructions source probes the blocker families.
FalsifyResult ha_falsify(const Graph& h, int max_n, FalsifySource source,
                         const std::vector<Graph>* corpus = nullptr);

}  // namespace minorforge
