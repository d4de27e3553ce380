#include "minorforge/embedding.hpp"

#include <algorithm>
#include <bitset>
#include <deque>
#include <functional>

#include "minorforge/config.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/minor.hpp"

namespace minorforge {

Bipartition min_B_bipartition(const Graph& h) {
    auto sides = bipartite_sides(h);
    if (!sides) throw NotBipartiteError("graph is not bipartite");
    auto comps = components(h);
    size_t nc = comps.size();

    // Per component: the side containing its least vertex, and the other.
    std::vector<std::pair<VertexSet, VertexSet>> comp_sides;
    comp_sides.reserve(nc);
    for (const auto& c : comps) {
        VertexSet s0 = c & sides->first, s1 = c & sides->second;
        if (!s0.test(c.first())) std::swap(s0, s1);
        comp_sides.emplace_back(s0, s1);
    }

    // Minimizing |B| subject to |A| <= |B| means maximizing |A| up to
    // floor(v/2). Subset-sum over the per-component side sizes, then a
    // greedy reconstruction preferring each component's side 0 into A.
    int target = h.n / 2;
    std::vector<std::bitset<256>> suffix(nc + 1);
    suffix[nc][0] = 1;
    for (size_t i = nc; i-- > 0;) {
        suffix[i] = (suffix[i + 1] << comp_sides[i].first.count()) |
                    (suffix[i + 1] << comp_sides[i].second.count());
    }
    int best = 0;
    for (int a = target; a >= 0; --a)
        if (suffix[0][a]) {
            best = a;
            break;
        }
    Bipartition out;
    out.A = VertexSet(h.n);
    int partial = 0;
    for (size_t i = 0; i < nc; ++i) {
        int c0 = comp_sides[i].first.count(), c1 = comp_sides[i].second.count();
        int need = best - partial;
        if (need >= c0 && need - c0 <= 255 && suffix[i + 1][need - c0]) {
            out.A |= comp_sides[i].first;
            partial += c0;
        } else if (need >= c1 && need - c1 <= 255 && suffix[i + 1][need - c1]) {
            out.A |= comp_sides[i].second;
            partial += c1;
        } else {
            throw std::logic_error("bipartition reconstruction failed");
        }
    }
    out.B = h.vertex_set() - out.A;
    return out;
}

std::vector<int> max_bipartite_matching(int n_left, int n_right,
                                        const std::vector<std::vector<int>>& adj) {
    std::vector<int> match_l(n_left, -1), match_r(n_right, -1);
    std::vector<char> visited(n_right);
    std::function<bool(int)> try_augment = [&](int l) {
        for (int r : adj[l]) {
            if (visited[r]) continue;
            visited[r] = 1;
            if (match_r[r] < 0 || try_augment(match_r[r])) {
                match_l[l] = r;
                match_r[r] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < n_left; ++l) {
        std::fill(visited.begin(), visited.end(), 0);
        try_augment(l);
    }
    return match_l;
}

std::vector<int> hall_embed(const Graph& h, int max_degree, const Graph& g, const VertexSet& x) {
    const int dd = max_degree;
    GraphStats hs = stats(h);
    if (!hs.is_bipartite) throw NotBipartiteError("pattern is not bipartite");
    if (hs.max_degree > dd)
        throw PreconditionError("max degree of pattern exceeds the bound: " +
                                std::to_string(hs.max_degree) + " > " + std::to_string(dd));
    for (int v = 0; v < g.n; ++v)
        if (!x.test(v) && g.degree(v) < h.n - 1)
            throw PreconditionError("host degree condition fails at vertex " + std::to_string(v) +
                                    ": deg < v(h)-1");
    // v(g) <= (1 + 1/(4*dd*(dd+1))) v(h) - 1, exactly in integers.
    long long q = 4LL * dd * (dd + 1);
    if (q * (g.n + 1) > (q + 1) * (long long)h.n)
        throw PreconditionError("host too large: v(g) > (1+1/(4*D*(D+1)))*v(h) - 1");
    long long xcap = (long long)(dd + 1) * ((long long)dd * dd + 1);
    if ((long long)x.count() * xcap > h.n)
        throw PreconditionError("exceptional set too large: |X| > v(h)/((D+1)(D^2+1))");

    VertexSet y = g.vertex_set() - x;

    // X0: largest deficient subset of X (|N(S) ∩ Y| < dd*|S|), ties lexicographic.
    VertexSet x0(g.n);
    {
        std::vector<int> xs = x.to_vector();
        int k = (int)xs.size();
        if (k > 20) throw BudgetExceededError("X too large for exhaustive deficiency search");
        int best_size = 0;
        for (uint64_t bits = 1; bits < (uint64_t{1} << k); ++bits) {
            VertexSet s(g.n);
            for (int i = 0; i < k; ++i)
                if ((bits >> i) & 1) s.set(xs[i]);
            int sz = s.count();
            if (sz < best_size) continue;
            if ((neighborhood(g, s) & y).count() < dd * sz) {
                if (sz > best_size || s.lex_less(x0)) {
                    best_size = sz;
                    x0 = s;
                }
            }
        }
    }
    if (g.n - x0.count() < h.n)
        throw HallFailureError("host minus X0 smaller than the pattern");
    VertexSet xp = x - x0;  // X'

    Bipartition bp = min_B_bipartition(h);

    // A0: greedily grown set of |X'| A-vertices, no two sharing a neighbour.
    std::vector<int> a0;
    {
        VertexSet blocked(h.n);  // A-vertices sharing a neighbour with current A0
        for (int a = bp.A.first(); a >= 0 && (int)a0.size() < xp.count(); a = bp.A.next(a)) {
            if (blocked.test(a)) continue;
            a0.push_back(a);
            VertexSet two_step = neighborhood(h, neighborhood(h, VertexSet::of(h.n, {a})));
            blocked |= two_step;
        }
        if ((int)a0.size() < xp.count())
            throw HallFailureError("could not select A0 avoiding shared neighbours");
    }

    std::vector<int> phi(h.n, -1);
    std::vector<char> g_used(g.n, 0);
    std::vector<int> xp_list = xp.to_vector();
    for (size_t i = 0; i < a0.size(); ++i) {
        phi[a0[i]] = xp_list[i];
        g_used[xp_list[i]] = 1;
    }

    // Disjoint dd-sets Y_t ⊆ N(t) ∩ Y via Hall's theorem applied dd times:
    // one matching with dd clones per X' vertex, whose Hall condition is
    // exactly the deficiency condition guaranteed by the choice of X0.
    std::vector<std::vector<int>> y_of_xp(xp_list.size());
    if (!xp_list.empty()) {
        std::vector<int> pool_vertex = y.to_vector();
        std::vector<std::vector<int>> adj(xp_list.size() * dd);
        for (size_t i = 0; i < xp_list.size(); ++i) {
            std::vector<int> row;
            for (size_t r = 0; r < pool_vertex.size(); ++r)
                if (g.has_edge(xp_list[i], pool_vertex[r])) row.push_back((int)r);
            for (int c = 0; c < dd; ++c) adj[i * dd + c] = row;
        }
        std::vector<int> match =
            max_bipartite_matching((int)adj.size(), (int)pool_vertex.size(), adj);
        for (size_t i = 0; i < xp_list.size(); ++i)
            for (int c = 0; c < dd; ++c) {
                int m = match[i * dd + c];
                if (m < 0) throw HallFailureError("Hall matching for the Y_v system failed");
                y_of_xp[i].push_back(pool_vertex[m]);
            }
    }

    // Map B: neighbours of A0 go into the matched Y-sets, the rest anywhere
    // fresh in Y.
    for (size_t i = 0; i < a0.size(); ++i) {
        size_t slot = 0;
        for (int w = h.adj[a0[i]].first(); w >= 0; w = h.adj[a0[i]].next(w)) {
            if (slot >= y_of_xp[i].size()) throw HallFailureError("Y_v slots exhausted");
            phi[w] = y_of_xp[i][slot++];
            g_used[phi[w]] = 1;
        }
    }
    for (int w = bp.B.first(); w >= 0; w = bp.B.next(w)) {
        if (phi[w] >= 0) continue;
        int pick = -1;
        for (int v = y.first(); v >= 0; v = y.next(v))
            if (!g_used[v]) {
                pick = v;
                break;
            }
        if (pick < 0) throw HallFailureError("ran out of Y vertices for B");
        phi[w] = pick;
        g_used[pick] = 1;
    }

    // System of distinct representatives for A' over Y' = Y minus phi(B).
    std::vector<int> ap;
    for (int a = bp.A.first(); a >= 0; a = bp.A.next(a))
        if (phi[a] < 0) ap.push_back(a);
    {
        std::vector<int> pool_vertex;
        for (int v = y.first(); v >= 0; v = y.next(v))
            if (!g_used[v]) pool_vertex.push_back(v);
        std::vector<std::vector<int>> adj(ap.size());
        for (size_t i = 0; i < ap.size(); ++i) {
            for (size_t r = 0; r < pool_vertex.size(); ++r) {
                bool ok = true;
                for (int w = h.adj[ap[i]].first(); w >= 0 && ok; w = h.adj[ap[i]].next(w))
                    if (!g.has_edge(phi[w], pool_vertex[r])) ok = false;
                if (ok) adj[i].push_back((int)r);
            }
        }
        std::vector<int> match = max_bipartite_matching((int)ap.size(), (int)pool_vertex.size(), adj);
        for (size_t i = 0; i < ap.size(); ++i) {
            if (match[i] < 0) throw HallFailureError("no system of distinct representatives for A'");
            phi[ap[i]] = pool_vertex[match[i]];
            g_used[phi[ap[i]]] = 1;
        }
    }

    // Postcondition: injective homomorphism into g - X0.
    std::vector<char> seen(g.n, 0);
    for (int v = 0; v < h.n; ++v) {
        if (phi[v] < 0 || seen[phi[v]] || x0.test(phi[v]))
            throw HallFailureError("embedding postcondition violated (injectivity)");
        seen[phi[v]] = 1;
    }
    for (auto [u, v] : h.edges())
        if (!g.has_edge(phi[u], phi[v]))
            throw HallFailureError("embedding postcondition violated (missing edge)");
    return phi;
}

std::vector<int> greedy_forest_embed(const Graph& f, const Graph& g, const VertexSet& forbidden) {
    if (!is_forest(f)) throw PreconditionError("pattern is not a forest");
    std::vector<int> phi(f.n, -1);
    VertexSet used = forbidden;
    for (const auto& comp : components(f)) {
        int root = comp.first();
        int host_root = -1;
        for (int v = 0; v < g.n; ++v)
            if (!used.test(v)) {
                host_root = v;
                break;
            }
        if (host_root < 0)
            throw StuckNoUnusedNeighbourError("no unused host vertex for component root");
        phi[root] = host_root;
        used.set(host_root);
        std::deque<int> q{root};
        VertexSet visited(f.n);
        visited.set(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w = f.adj[u].first(); w >= 0; w = f.adj[u].next(w)) {
                if (visited.test(w)) continue;
                visited.set(w);
                int pick = -1;
                for (int c = g.adj[phi[u]].first(); c >= 0; c = g.adj[phi[u]].next(c))
                    if (!used.test(c)) {
                        pick = c;
                        break;
                    }
                if (pick < 0)
                    throw StuckNoUnusedNeighbourError("no unused neighbour while extending tree at " +
                                                      std::to_string(u));
                phi[w] = pick;
                used.set(pick);
                q.push_back(w);
            }
        }
    }
    for (auto [u, v] : f.edges())
        if (!g.has_edge(phi[u], phi[v])) throw std::logic_error("forest embedding not edge-preserving");
    return phi;
}

PackResult pack_components(const Graph& h, const Graph& g, int size_cap) {
    PackResult out;
    out.used_host = VertexSet(g.n);
    out.packed_vertices = VertexSet(h.n);
    out.phi.assign(h.n, -1);
    auto comps = components(h);
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        int csize = comps[ci].count();
        if (out.used_host.count() + csize > size_cap) continue;
        MappedSubgraph comp = subgraph_induced_mapped(h, comps[ci]);
        auto emb = find_subgraph_iso(comp.graph, g, out.used_host, {});
        if (!emb) continue;
        out.packed_components.push_back((int)ci);
        out.packed_vertices |= comps[ci];
        for (int lv = 0; lv < comp.graph.n; ++lv) {
            out.phi[comp.new_to_old[lv]] = (*emb)[lv];
            out.used_host.set((*emb)[lv]);
        }
    }
    MappedSubgraph g0 = subgraph_induced_mapped(g, out.used_host);
    out.g0 = g0.graph;
    out.g0_new_to_old = g0.new_to_old;
    MappedSubgraph h0 = subgraph_induced_mapped(h, out.packed_vertices);
    out.h0 = h0.graph;
    out.h0_new_to_old = h0.new_to_old;
    return out;
}

}  // namespace minorforge
