#include "minorforge/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "minorforge/config.hpp"
#include "minorforge/embedding.hpp"
#include "minorforge/enumeration.hpp"
#include "minorforge/errors.hpp"

namespace minorforge {

KstBlocker construct_kst_blocker(int s, int t, uint64_t seed) {
    if (s < 1 || t < 1) throw InfeasibleParametersError("s and t must be positive");
    KstBlocker out;
    out.d = (int)std::ceil(std::sqrt(2.0 * s));
    // Exact floor((t - sqrt(2s)) / 2): largest m with (t - 2m)^2 >= 2s and
    // t - 2m >= 0.
    int m = -1;
    for (int cand = t / 2; cand >= 0; --cand) {
        long long r = t - 2LL * cand;
        if (r >= 0 && r * r >= 2LL * s) {
            m = cand;
            break;
        }
    }
    if (m < 0) throw InfeasibleParametersError("t too small relative to s");
    int order = 2 * (s + m);
    out.girth_required = (long long)(out.d + 1) * s;
    if (out.girth_required > order * 4)
        throw InfeasibleParametersError("required girth unreachable at this order");
    out.regular_core = regular_high_girth(out.d, (int)out.girth_required, order, seed);
    out.graph = complement(out.regular_core);
    out.graph.label = "kst-blocker(" + std::to_string(s) + "," + std::to_string(t) + ")";
    out.delta_recomputed = stats(out.graph).min_degree;
    if (out.delta_recomputed != order - out.d - 1)
        throw std::logic_error("complement degree identity failed");
    out.delta_target = 2.0 * s + t - 2.0 * std::sqrt(2.0 * s) - 2.0;
    out.regime_ok = out.delta_recomputed >= out.delta_target;
    return out;
}

Sk7Blocker construct_sk7_blocker(int s) {
    if (s < 1) throw InfeasibleParametersError("s must be positive");
    Sk7Blocker out;
    out.part_size = (int)((11LL * s - 1) / 3);
    out.graph = complete_multipartite({out.part_size, out.part_size, out.part_size});
    out.graph.label = "sk7-blocker(" + std::to_string(s) + ")";
    out.delta_recomputed = stats(out.graph).min_degree;
    out.delta_target = Rational(22 * s, 3) - Rational(2);
    if (out.delta_recomputed != 2 * out.part_size)
        throw std::logic_error("3-partite degree identity failed");
    if (Rational(out.delta_recomputed) < out.delta_target)
        throw std::logic_error("blocker misses its degree target");
    return out;
}

BipartiteExpansion bipartite_expand(const Graph& h, int max_degree) {
    if (max_degree < 3) throw PreconditionError("max_degree must be at least 3");
    BipartiteExpansion out;
    int dd = max_degree;
    out.k_of.assign(h.n, 0);
    int total = 0;
    for (int v = 0; v < h.n; ++v) {
        out.k_of[v] = h.degree(v) / (dd - 2) + 1;
        total += 2 * out.k_of[v];
    }
    if (total > VertexSet::kMaxBits) throw BudgetExceededError("expansion exceeds vertex capacity");

    // Layout: for h-vertex v, its block starts at offset[v]; the path is
    // a_1 b_1 a_2 b_2 ... with A-vertices at even local positions.
    std::vector<int> offset(h.n, 0);
    for (int v = 1; v < h.n; ++v) offset[v] = offset[v - 1] + 2 * out.k_of[v - 1];
    out.graph = Graph(total);
    out.side_a = VertexSet(total);
    out.side_b = VertexSet(total);
    for (int v = 0; v < h.n; ++v) {
        for (int i = 0; i < 2 * out.k_of[v]; ++i) {
            int id = offset[v] + i;
            (i % 2 == 0 ? out.side_a : out.side_b).set(id);
            if (i > 0) out.graph.add_edge(id - 1, id);
        }
    }
    // One crossing edge per h-edge, endpoint with the fewest used slots on
    // each side (path-interior slack is D-2, path ends get one extra).
    std::vector<int> used(total, 0);
    auto pick_slot = [&](int v, bool a_side) {
        int best = -1;
        for (int i = 0; i < out.k_of[v]; ++i) {
            int id = offset[v] + 2 * i + (a_side ? 0 : 1);
            int path_deg = out.graph.degree(id) - used[id];
            if (used[id] + path_deg >= dd) continue;
            if (best < 0 || used[id] < used[best]) best = id;
        }
        return best;
    };
    for (auto [u, v] : h.edges()) {
        int a = pick_slot(u, true);
        int b = pick_slot(v, false);
        if (a < 0 || b < 0)
            throw SlotAllocationError("no free slot for edge (" + std::to_string(u) + "," +
                                      std::to_string(v) + ")");
        out.graph.add_edge(a, b);
        ++used[a];
        ++used[b];
    }
    GraphStats gs = stats(out.graph);
    if (!gs.is_bipartite || gs.max_degree > dd)
        throw SlotAllocationError("expansion violates bipartiteness or the degree bound");

    out.witness.pattern = h;
    out.witness.host = out.graph;
    out.witness.branch_sets.assign(h.n, VertexSet(total));
    for (int v = 0; v < h.n; ++v)
        for (int i = 0; i < 2 * out.k_of[v]; ++i) out.witness.branch_sets[v].set(offset[v] + i);
    if (!verify_model(out.witness)) throw std::logic_error("expansion witness invalid");

    // v(H') <= 4e/(D-2) + 2v, integral exactly when D-2 divides every degree.
    long long num = 4LL * h.m + 2LL * h.n * (dd - 2);
    out.size_bound = num / (dd - 2);
    out.bound_is_equality = ((long long)total * (dd - 2) == num);
    if ((long long)total * (dd - 2) > num) throw std::logic_error("expansion size bound violated");
    return out;
}

SkttBlocker construct_sktt_blocker(int s, int t, int k) {
    if (s < 1 || t < 1 || k < 1) throw InfeasibleParametersError("s, t, k must be positive");
    SkttBlocker out;
    long long y = (long long)s * t - 1;
    out.v_closed_form = (long long)k * t + y;
    out.e_closed_form = y * (y - 1) / 2 + y * k * t + (long long)k * t * (t - 1) / 2;
    if (out.v_closed_form > VertexSet::kMaxBits)
        throw BudgetExceededError("blocker exceeds vertex capacity");

    // Vertices: k cliques of size t, then y universal vertices.
    Graph g((int)out.v_closed_form);
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) g.add_edge(c * t + i, c * t + j);
    for (int u = k * t; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (u != v) g.add_edge(u, v);
    g.label = "sktt-blocker(" + std::to_string(s) + "," + std::to_string(t) + "," +
              std::to_string(k) + ")";
    if (g.m != out.e_closed_form) throw std::logic_error("edge count misses its closed form");
    out.graph = g;
    return out;
}

FalsifyResult ha_falsify(const Graph& h, int max_n, FalsifySource source,
                         const std::vector<Graph>* corpus) {
    FalsifyResult out;
    int need = h.n - 1;
    auto try_candidate = [&](const Graph& g) {
        if (g.n == 0 || g.n > Config::global().minor_cap) return false;
        if (stats(g).min_degree < need) return false;
        ++out.candidates_checked;
        if (!test_minor(h, g).has_value()) {
            out.counterexample = g;
            return true;
        }
        return false;
    };

    if (source == FalsifySource::ConstructionsOnly) {
        std::vector<Graph> candidates;
        for (int s = 1; s <= 3; ++s) {
            Sk7Blocker b = construct_sk7_blocker(s);
            if (b.graph.n <= Config::global().minor_cap) candidates.push_back(b.graph);
        }
        for (int s = 1; s <= 2; ++s)
            for (int t = 1; t <= 3; ++t)
                for (int k = 1; k <= 4; ++k) {
                    SkttBlocker b = construct_sktt_blocker(s, t, k);
                    if (b.graph.n <= Config::global().minor_cap) candidates.push_back(b.graph);
                }
        for (int s = 1; s <= 2; ++s)
            for (int t = 4; t <= 8; ++t) {
                try {
                    KstBlocker b = construct_kst_blocker(s, t, Config::global().seed);
                    if (b.graph.n <= Config::global().minor_cap) candidates.push_back(b.graph);
                } catch (const InfeasibleParametersError&) {
                }
            }
        for (const Graph& g : candidates)
            if (try_candidate(g)) return out;
        return out;
    }

    if (corpus) {
        for (const Graph& g : *corpus)
            if (g.n <= max_n && try_candidate(g)) return out;
        return out;
    }
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : all_graphs_of_order(n))
            if (try_candidate(g)) return out;
    return out;
}

}  // namespace minorforge
