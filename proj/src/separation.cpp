#include "minorforge/separation.hpp"

#include <algorithm>
#include <bitset>
#include <deque>

#include "minorforge/config.hpp"
#include "minorforge/errors.hpp"

namespace minorforge {

bool separation_valid(const Graph& g, const Separation& s, std::string* why) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if ((s.A | s.B) != g.vertex_set()) return fail("A and B do not cover V");
    VertexSet aOnly = s.A - s.B, bOnly = s.B - s.A;
    if (aOnly.empty()) return fail("A\\B empty");
    if (bOnly.empty()) return fail("B\\A empty");
    for (int v = aOnly.first(); v >= 0; v = aOnly.next(v))
        if (g.adj[v].intersects(bOnly)) return fail("edge crosses A\\B to B\\A");
    return true;
}

namespace {

// Enumerates subsets of {0..n-1} of the given size in lexicographic order.
struct Combinations {
    int n, k;
    std::vector<int> idx;
    bool done = false;

    Combinations(int n_, int k_) : n(n_), k(k_) {
        if (k > n) {
            done = true;
            return;
        }
        idx.resize(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
    }

    bool next() {
        if (done) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) {
            done = true;
            return false;
        }
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    }

    VertexSet as_set() const {
        VertexSet s(n);
        for (int i : idx) s.set(i);
        return s;
    }
};

struct SubsetBudget {
    int64_t left = Config::global().subset_budget;
    void tick() {
        if (--left < 0) throw BudgetExceededError("separation enumeration budget exhausted");
    }
};

}  // namespace

DensePairCheck is_dense_pair(const Graph& g, const VertexSet& x, int d, int k) {
    if (!x.is_subset_of(g.vertex_set()) || x == g.vertex_set())
        throw XNotProperError("X must be a proper subset of V(G)");
    DensePairCheck out;
    for (int v = 0; v < g.n; ++v) {
        if (x.test(v)) continue;
        if (g.degree(v) < d) {
            out.ok = false;
            out.low_degree_vertex = v;
            return out;
        }
    }
    SubsetBudget budget;
    for (int size = 0; size <= std::min(k, g.n); ++size) {
        Combinations comb(g.n, size);
        if (comb.done) continue;
        do {
            budget.tick();
            VertexSet s = comb.as_set();
            auto comps = components(g, g.vertex_set() - s);
            // A violating separation needs two components that each reach
            // outside X.
            std::vector<int> outside;
            for (size_t i = 0; i < comps.size(); ++i)
                if (!(comps[i] - x).empty()) outside.push_back((int)i);
            if (outside.size() >= 2) {
                Separation viol;
                viol.A = s | comps[outside[0]];
                viol.B = s;
                for (size_t i = 0; i < comps.size(); ++i)
                    if ((int)i != outside[0]) viol.B |= comps[i];
                out.ok = false;
                out.violation = viol;
                return out;
            }
        } while (comb.next());
    }
    return out;
}

std::optional<Separation> find_min_A_separation(const Graph& g, int max_order_exclusive) {
    std::optional<Separation> best;
    SubsetBudget budget;
    for (int size = 0; size < std::min(max_order_exclusive, g.n + 1); ++size) {
        Combinations comb(g.n, size);
        if (comb.done) continue;
        do {
            budget.tick();
            VertexSet s = comb.as_set();
            auto comps = components(g, g.vertex_set() - s);
            if (comps.size() < 2) continue;
            // Smallest component (ties lexicographic) minimizes |A| for this S.
            int bi = 0;
            for (size_t i = 1; i < comps.size(); ++i) {
                if (comps[i].count() < comps[bi].count() ||
                    (comps[i].count() == comps[bi].count() && comps[i].lex_less(comps[bi])))
                    bi = (int)i;
            }
            Separation cand;
            cand.A = s | comps[bi];
            cand.B = s;
            for (size_t i = 0; i < comps.size(); ++i)
                if ((int)i != bi) cand.B |= comps[i];
            if (!best || cand.A.count() < best->A.count() ||
                (cand.A.count() == best->A.count() && cand.A.lex_less(best->A)))
                best = cand;
        } while (comb.next());
    }
    return best;
}

std::optional<Separation> find_min_order_separation(const Graph& g, int max_order_exclusive) {
    SubsetBudget budget;
    for (int size = 0; size < std::min(max_order_exclusive, g.n + 1); ++size) {
        Combinations comb(g.n, size);
        if (comb.done) continue;
        do {
            budget.tick();
            VertexSet s = comb.as_set();
            auto comps = components(g, g.vertex_set() - s);
            if (comps.size() < 2) continue;
            Separation sep;
            sep.A = s | comps[0];
            sep.B = s;
            for (size_t i = 1; i < comps.size(); ++i) sep.B |= comps[i];
            return sep;
        } while (comb.next());
    }
    return std::nullopt;
}

ExtractedDensePair extract_dense_pair(const Graph& g, int k) {
    if (k <= 0) throw PreconditionError("k must be positive");
    if (g.n == 0) throw PreconditionError("graph must be non-null");
    int d = stats(g).min_degree;

    ExtractedDensePair cur;
    cur.sub.graph = g;
    cur.sub.new_to_old.resize(g.n);
    cur.sub.old_to_new.resize(g.n);
    for (int v = 0; v < g.n; ++v) cur.sub.new_to_old[v] = cur.sub.old_to_new[v] = v;
    cur.x = VertexSet(g.n);

    for (int guard = 0; guard <= g.n; ++guard) {
        if (is_dense_pair(cur.sub.graph, cur.x, d, k)) return cur;
        auto sep = find_min_A_separation(cur.sub.graph, 2 * k);
        if (!sep) break;  // cannot happen: a violation of order <= k < 2k exists
        MappedSubgraph inner = subgraph_induced_mapped(cur.sub.graph, sep->A);
        VertexSet new_x(inner.graph.n);
        VertexSet boundary = sep->A & sep->B;
        for (int v = boundary.first(); v >= 0; v = boundary.next(v))
            new_x.set(inner.old_to_new[v]);
        // Compose the id maps so new_to_old still points into the input graph.
        ExtractedDensePair next;
        next.sub.graph = inner.graph;
        next.sub.new_to_old.resize(inner.graph.n);
        next.sub.old_to_new.assign(g.n, -1);
        for (int v = 0; v < inner.graph.n; ++v) {
            int orig = cur.sub.new_to_old[inner.new_to_old[v]];
            next.sub.new_to_old[v] = orig;
            next.sub.old_to_new[orig] = v;
        }
        next.x = new_x;
        cur = std::move(next);
    }
    throw std::logic_error("dense pair extraction failed to converge");
}

namespace {

// Unit vertex capacities on the split digraph: node 2v is v_in, 2v+1 is
// v_out; only in->out edges carry finite capacity, so the min cut is a
// vertex set. `uncapped` lifts the capacity of selected vertices (used for
// pairwise connectivity, where the endpoints carry many paths).
struct VertexFlow {
    int n, source, sink, nodes, big;
    std::vector<std::vector<int>> cap;

    VertexFlow(const Graph& g, const VertexSet& u, const VertexSet& w,
               const VertexSet& uncapped)
        : n(g.n), source(2 * g.n), sink(2 * g.n + 1), nodes(2 * g.n + 2), big(g.n + 2) {
        cap.assign(nodes, std::vector<int>(nodes, 0));
        for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = uncapped.test(v) ? big : 1;
        for (auto [a, b] : g.edges()) {
            cap[2 * a + 1][2 * b] = big;
            cap[2 * b + 1][2 * a] = big;
        }
        for (int v = u.first(); v >= 0; v = u.next(v)) cap[source][2 * v] = big;
        for (int v = w.first(); v >= 0; v = w.next(v)) cap[2 * v + 1][sink] = big;
    }

    int augment_limit(int limit) {
        int flow = 0;
        std::vector<int> par(nodes);
        while (flow < limit) {
            std::fill(par.begin(), par.end(), -1);
            par[source] = source;
            std::deque<int> q{source};
            while (!q.empty() && par[sink] < 0) {
                int a = q.front();
                q.pop_front();
                for (int b = 0; b < nodes; ++b)
                    if (cap[a][b] > 0 && par[b] < 0) {
                        par[b] = a;
                        q.push_back(b);
                    }
            }
            if (par[sink] < 0) break;
            for (int b = sink; b != source; b = par[b]) {
                cap[par[b]][b] -= 1;
                cap[b][par[b]] += 1;
            }
            ++flow;
        }
        return flow;
    }

    // Original vertices whose in-node is residual-reachable but out-node is
    // not: the minimum vertex cut.
    VertexSet min_cut() const {
        std::vector<char> reach(nodes, 0);
        reach[source] = 1;
        std::deque<int> q{source};
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            for (int b = 0; b < nodes; ++b)
                if (cap[a][b] > 0 && !reach[b]) {
                    reach[b] = 1;
                    q.push_back(b);
                }
        }
        VertexSet cut(n);
        for (int v = 0; v < n; ++v)
            if (reach[2 * v] && !reach[2 * v + 1]) cut.set(v);
        return cut;
    }

    // Decomposes the flow into vertex-disjoint paths of original vertices.
    // Unit vertex capacities make the walk unambiguous.
    std::vector<std::vector<int>> paths(const Graph& g, const VertexSet& u) const {
        std::vector<std::vector<int>> out;
        for (int s = u.first(); s >= 0; s = u.next(s)) {
            if (cap[source][2 * s] == big) continue;  // no flow into s
            std::vector<int> path{s};
            int v = s;
            while (cap[sink][2 * v + 1] == 0) {  // flow does not yet end here
                int next = -1;
                for (int b = g.adj[v].first(); b >= 0; b = g.adj[v].next(b))
                    if (cap[2 * b][2 * v + 1] > 0) {  // residual back-edge: flow v_out -> b_in
                        next = b;
                        break;
                    }
                if (next < 0) throw std::logic_error("flow path decomposition broke");
                path.push_back(next);
                v = next;
            }
            out.push_back(path);
        }
        return out;
    }
};

}  // namespace

int min_vertex_cut_between(const Graph& g, const VertexSet& u, const VertexSet& w) {
    VertexFlow f(g, u, w, VertexSet(g.n));
    return f.augment_limit(g.n + 1);
}

int connectivity(const Graph& g) {
    if (g.n == 0) throw PreconditionError("connectivity of the null graph");
    if (g.m == (long long)g.n * (g.n - 1) / 2) return g.n - 1;
    int best = g.n;
    VertexSet su(g.n), sw(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (g.has_edge(u, v)) continue;
            su.clear();
            su.set(u);
            sw.clear();
            sw.set(v);
            VertexFlow f(g, su, sw, su | sw);
            best = std::min(best, f.augment_limit(best));
        }
    return best;
}

bool menger_pair_valid(const Graph& g, const Separation& s, const VertexSet& u,
                       const VertexSet& w) {
    if ((s.A | s.B) != g.vertex_set()) return false;
    if (!u.is_subset_of(s.A) || !w.is_subset_of(s.B)) return false;
    VertexSet aOnly = s.A - s.B, bOnly = s.B - s.A;
    for (int v = aOnly.first(); v >= 0; v = aOnly.next(v))
        if (g.adj[v].intersects(bOnly)) return false;
    return true;
}

MengerResult menger_paths(const Graph& g, const VertexSet& u, const VertexSet& w, int l) {
    if (u.empty() || w.empty()) throw PreconditionError("U and W must be non-empty");
    MengerResult out;
    VertexFlow f(g, u, w, VertexSet(g.n));
    int flow = f.augment_limit(l);
    if (flow >= l) {
        out.paths = f.paths(g, u);
        return out;
    }
    VertexSet cut = f.min_cut();
    // A := cut plus everything U reaches in G - cut; B := the rest plus cut.
    VertexSet reach(g.n);
    VertexSet within = g.vertex_set() - cut;
    for (int v = (u - cut).first(); v >= 0; v = (u - cut).next(v))
        if (!reach.test(v)) reach |= component_of(g, v, within);
    Separation sep;
    sep.A = reach | cut;
    sep.B = (g.vertex_set() - reach);
    if (!u.is_subset_of(sep.A) || !w.is_subset_of(sep.B))
        throw std::logic_error("menger cut does not separate U from W");
    out.separation = sep;
    return out;
}

std::optional<Separation> balanced_separator(const Graph& g) {
    if (g.n < 2) throw PreconditionError("balanced separator needs at least 2 vertices");
    int cap_side = (2 * g.n + 2) / 3;
    SubsetBudget budget;
    for (int size = 0; size <= g.n - 2; ++size) {
        if (size > cap_side) break;  // |A| >= |S| already too big
        Combinations comb(g.n, size);
        if (comb.done) continue;
        do {
            budget.tick();
            VertexSet s = comb.as_set();
            auto comps = components(g, g.vertex_set() - s);
            if (comps.size() < 2) continue;
            int rest = g.n - size;
            int tmin = std::max(1, g.n - cap_side);
            int tmax = std::min(rest - 1, cap_side - size);
            if (tmin > tmax) continue;
            // Subset-sum over component sizes: which A-side totals are
            // achievable by suffixes, then a greedy lexicographic assignment.
            size_t nc = comps.size();
            std::vector<std::bitset<256>> suffix(nc + 1);
            suffix[nc][0] = 1;
            for (size_t i = nc; i-- > 0;) {
                suffix[i] = suffix[i + 1] | (suffix[i + 1] << comps[i].count());
            }
            bool feasible = false;
            for (int t = tmin; t <= tmax && !feasible; ++t) feasible = suffix[0][t];
            if (!feasible) continue;
            VertexSet aside(g.n);
            int partial = 0;
            for (size_t i = 0; i < nc; ++i) {
                auto reachable = [&](int partial_sum, size_t idx) {
                    for (int t = tmin; t <= tmax; ++t)
                        if (t >= partial_sum && suffix[idx][t - partial_sum]) return true;
                    return false;
                };
                if (reachable(partial, i + 1)) continue;  // leave comp i on the B side
                aside |= comps[i];
                partial += comps[i].count();
            }
            Separation sep;
            sep.A = s | aside;
            sep.B = g.vertex_set() - aside;
            if (sep.A.count() > cap_side || sep.B.count() > cap_side)
                throw std::logic_error("balanced separator assignment overflow");
            return sep;
        } while (comb.next());
    }
    return std::nullopt;
}

}  // namespace minorforge
