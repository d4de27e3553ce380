#include "minorforge/density.hpp"

#include <algorithm>

#include "minorforge/config.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/separation.hpp"

namespace minorforge {

namespace {

Rational density_of(const Graph& g) {
    if (g.n == 0) throw PreconditionError("density of the null graph");
    return Rational(g.m, g.n);
}

Rational density_of_subset(const Graph& g, const VertexSet& s) {
    long long e = 0;
    for (int v = s.first(); v >= 0; v = s.next(v)) e += (g.adj[v] & s).count();
    return Rational(e / 2, s.count());
}

// Vertices in min-degree peeling order; suffix i.. induces the graph left
// after removing the first i vertices.
std::vector<int> peeling_order(const Graph& g) {
    std::vector<int> order;
    order.reserve(g.n);
    VertexSet alive = g.vertex_set();
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    while (alive.any()) {
        int best = -1;
        for (int v = alive.first(); v >= 0; v = alive.next(v))
            if (best < 0 || deg[v] < deg[best]) best = v;
        order.push_back(best);
        alive.reset(best);
        VertexSet nb = g.adj[best] & alive;
        for (int u = nb.first(); u >= 0; u = nb.next(u)) --deg[u];
    }
    return order;
}

}  // namespace

PruneResult prune_high_degree(const Graph& g, int D, const Rational& alpha) {
    GraphStats s = stats(g);
    if (g.n == 0 || s.min_degree < D)
        throw PreconditionError("prune requires delta(g) >= D");
    Rational limit = (Rational(1) + alpha) * Rational(D);
    PruneResult out;
    out.removed = VertexSet(g.n);
    for (int v = 0; v < g.n; ++v)
        if (Rational(g.degree(v)) > limit) out.removed.set(v);
    out.sub = subgraph_induced_mapped(g, g.vertex_set() - out.removed);
    out.density_after = out.sub.graph.n > 0 ? density_of(out.sub.graph) : Rational(0);
    return out;
}

IncrementOutcome dense_step(const Graph& g, const Rational& eps) {
    IncrementOutcome out;
    if (g.n == 0 || eps <= Rational(0)) {
        out.reason = "empty graph or non-positive eps";
        return out;
    }
    Rational d = density_of(g);
    if (d < Rational(2) / eps) {
        out.reason = "hypothesis d(g) >= 2/eps fails";
        return out;
    }
    Rational vmax_r = d / (eps * Rational(2));
    int vmax = (int)std::min<int64_t>(vmax_r.floor(), g.n);
    Rational dmin = eps * d;

    // (i) Small dense connected subgraph, smallest first. Exhaustive over
    // connected subsets below the cap, peeling suffixes above it.
    if (g.n <= Config::global().dense_exact_cap && g.n <= 64) {
        std::vector<uint64_t> gadj(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            for (int u = g.adj[v].first(); u >= 0; u = g.adj[v].next(u))
                gadj[v] |= uint64_t{1} << u;
        uint64_t best = 0;
        int best_size = g.n + 1;
        int64_t nodes = Config::global().subset_budget;
        auto edge_count = [&](uint64_t s) {
            long long e = 0;
            uint64_t t = s;
            while (t) {
                int v = __builtin_ctzll(t);
                t &= t - 1;
                e += __builtin_popcountll(gadj[v] & s);
            }
            return e / 2;
        };
        std::function<void(uint64_t, int, uint64_t, uint64_t, uint64_t)> grow =
            [&](uint64_t s, int sz, uint64_t ext, uint64_t forb, uint64_t allowed) {
                if (--nodes < 0) throw BudgetExceededError("dense subgraph enumeration budget");
                if (sz < best_size && Rational(edge_count(s), sz) >= dmin) {
                    best_size = sz;
                    best = s;
                }
                if (sz >= std::min(vmax, best_size - 1)) return;
                uint64_t cand = ext, banned = forb;
                while (cand) {
                    int c = __builtin_ctzll(cand);
                    uint64_t cb = uint64_t{1} << c;
                    cand &= ~cb;
                    grow(s | cb, sz + 1, cand | (gadj[c] & allowed & ~(s | cb) & ~banned), banned,
                         allowed);
                    banned |= cb;
                }
            };
        uint64_t all = g.n == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n) - 1;
        for (int w = 0; w < g.n; ++w) {
            uint64_t wb = uint64_t{1} << w;
            uint64_t allowed = all & ~(wb - 1);
            grow(wb, 1, gadj[w] & allowed & ~wb, 0, allowed);
        }
        if (best_size <= vmax) {
            Piece p;
            p.host_vertices = VertexSet(g.n);
            uint64_t t = best;
            while (t) {
                p.host_vertices.set(__builtin_ctzll(t));
                t &= t - 1;
            }
            p.subgraph = subgraph_induced(g, p.host_vertices);
            p.density = density_of(p.subgraph);
            out.tag = IncrementOutcome::Tag::Pieces;
            out.pieces.push_back(std::move(p));
            return out;
        }
    } else {
        std::vector<int> order = peeling_order(g);
        // Smallest qualifying suffix; its densest component if disconnected.
        for (int sz = 1; sz <= vmax; ++sz) {
            VertexSet suffix(g.n);
            for (int i = g.n - sz; i < g.n; ++i) suffix.set(order[i]);
            std::optional<VertexSet> pick;
            Rational pick_density(0);
            for (const auto& comp : components(g, suffix)) {
                Rational cd = density_of_subset(g, comp);
                if (comp.count() <= vmax && cd >= dmin && (!pick || cd > pick_density)) {
                    pick = comp;
                    pick_density = cd;
                }
            }
            if (pick) {
                Piece p;
                p.host_vertices = *pick;
                p.subgraph = subgraph_induced(g, *pick);
                p.density = density_of(p.subgraph);
                out.tag = IncrementOutcome::Tag::Pieces;
                out.pieces.push_back(std::move(p));
                return out;
            }
        }
    }

    // (ii) Density-raising contraction: a maximal matching inside the
    // densest peeling core, accepted only on a strict certified increase.
    {
        std::vector<int> order = peeling_order(g);
        VertexSet core(g.n);
        Rational core_density(-1);
        VertexSet suffix(g.n);
        for (int i = g.n - 1; i >= 0; --i) {
            suffix.set(order[i]);
            Rational cd = density_of_subset(g, suffix);
            if (cd > core_density) {
                core_density = cd;
                core = suffix;
            }
        }
        std::vector<std::pair<int, int>> matching;
        VertexSet matched(g.n);
        for (int v = core.first(); v >= 0; v = core.next(v)) {
            if (matched.test(v)) continue;
            VertexSet cands = (g.adj[v] & core) - matched;
            int u = cands.first();
            if (u >= 0) {
                matching.emplace_back(v, u);
                matched.set(v);
                matched.set(u);
            }
        }
        if (!matching.empty()) {
            // Pattern: the core with each matched pair contracted.
            MappedSubgraph coreg = subgraph_induced_mapped(g, core);
            std::vector<int> rep(coreg.graph.n);
            for (int v = 0; v < coreg.graph.n; ++v) rep[v] = v;
            for (auto [a, b] : matching) rep[coreg.old_to_new[b]] = coreg.old_to_new[a];
            std::vector<int> compact(coreg.graph.n, -1);
            int np = 0;
            for (int v = 0; v < coreg.graph.n; ++v)
                if (rep[v] == v) compact[v] = np++;
            Graph pattern(np);
            for (auto [u, v] : coreg.graph.edges()) {
                int a = compact[rep[u]], b = compact[rep[v]];
                if (a != b) pattern.add_edge(a, b);
            }
            Rational pd = np > 0 ? Rational(pattern.m, np) : Rational(0);
            Rational claimed = (Rational(1) + eps) * d;
            if (pd >= claimed) {
                MinorModel model;
                model.pattern = pattern;
                model.host = g;
                model.branch_sets.assign(np, VertexSet(g.n));
                for (int v = 0; v < coreg.graph.n; ++v)
                    model.branch_sets[compact[rep[v]]].set(coreg.new_to_old[v]);
                if (!verify_model(model)) throw std::logic_error("contraction model invalid");
                out.tag = IncrementOutcome::Tag::DenserMinor;
                out.minor_pattern = pattern;
                out.minor_model = model;
                out.claimed_density = claimed;
                return out;
            }
        }
    }

    out.reason = "no qualifying subgraph or density-raising contraction found";
    return out;
}

ExtractResult extract_pieces(const Graph& g, int D, int K, const Rational& eps,
                             const Rational& gamma) {
    ExtractResult res;
    GraphStats s = stats(g);
    if (g.n == 0 || s.min_degree < D)
        throw PreconditionError("extract_pieces requires delta(g) >= D");
    if (eps <= Rational(0)) throw PreconditionError("eps must be positive");

    PruneResult pruned = prune_high_degree(g, D, Rational(1));
    RoundInfo prune_row;
    prune_row.round = 0;
    prune_row.v = pruned.sub.graph.n;
    prune_row.e = pruned.sub.graph.m;
    prune_row.density = pruned.density_after;
    prune_row.action = "prune";
    prune_row.note = "removed " + std::to_string(pruned.removed.count()) + " high-degree vertices";
    res.ledger.push_back(prune_row);

    // Proof-side constants, recomputed for the ledger only.
    Rational C = (Rational(K + 1) + Rational(1) / (Rational(3) * gamma)) / eps;

    // Current graph tracked as a vertex subset of the pruned graph.
    Graph cur = pruned.sub.graph;
    std::vector<int> cur_to_g = pruned.sub.new_to_old;
    std::vector<Piece> pieces;

    for (int i = 1; i <= K; ++i) {
        RoundInfo row;
        row.round = i;
        row.v = cur.n;
        row.e = cur.m;
        row.density = cur.n > 0 ? Rational(cur.m, cur.n) : Rational(0);
        IncrementOutcome step = dense_step(cur, eps * Rational(3));
        if (step.tag == IncrementOutcome::Tag::Inconclusive) {
            row.action = "inconclusive";
            row.note = step.reason;
            res.ledger.push_back(row);
            res.outcome.tag = IncrementOutcome::Tag::Inconclusive;
            res.outcome.reason = step.reason;
            res.outcome.round = i;
            return res;
        }
        if (step.tag == IncrementOutcome::Tag::DenserMinor) {
            row.action = "minor";
            // Lift branch sets to g coordinates.
            MinorModel lifted;
            lifted.pattern = *step.minor_pattern;
            lifted.host = g;
            lifted.branch_sets.assign(lifted.pattern.n, VertexSet(g.n));
            for (int pv = 0; pv < lifted.pattern.n; ++pv)
                for (int v = step.minor_model->branch_sets[pv].first(); v >= 0;
                     v = step.minor_model->branch_sets[pv].next(v))
                    lifted.branch_sets[pv].set(cur_to_g[v]);
            if (!verify_model(lifted)) throw std::logic_error("lifted minor model invalid");
            Rational pd(lifted.pattern.m, lifted.pattern.n);
            row.bounds_ok = pd >= step.claimed_density;
            row.note = "d(pattern)=" + pd.to_string();
            res.ledger.push_back(row);
            res.outcome.tag = IncrementOutcome::Tag::DenserMinor;
            res.outcome.minor_pattern = lifted.pattern;
            res.outcome.minor_model = lifted;
            res.outcome.claimed_density = step.claimed_density;
            res.outcome.round = i;
            return res;
        }
        // Subgraph outcome: record the piece in g coordinates, peel it off.
        const Piece& local = step.pieces[0];
        Piece lifted;
        lifted.host_vertices = VertexSet(g.n);
        for (int v = local.host_vertices.first(); v >= 0; v = local.host_vertices.next(v))
            lifted.host_vertices.set(cur_to_g[v]);
        lifted.subgraph = local.subgraph;
        lifted.density = local.density;
        bool vb = Rational(lifted.subgraph.n) <= Rational(D) / eps;
        bool db = lifted.density >= eps * Rational(D);
        row.action = "subgraph";
        row.bounds_ok = vb && db;
        row.note = "v(J)=" + std::to_string(lifted.subgraph.n) + " d(J)=" + lifted.density.to_string();
        // Condition (c) feasibility against the proof constants, advisory.
        Rational vbound = (C - Rational(i + 1) / eps) * Rational(D);
        if (Rational(cur.n - lifted.subgraph.n) < vbound)
            row.note += " (below (c) size ledger bound)";
        res.ledger.push_back(row);
        if (!row.bounds_ok) {
            res.outcome.tag = IncrementOutcome::Tag::Inconclusive;
            res.outcome.reason = "piece found but conclusion bounds fail at round " +
                                 std::to_string(i);
            res.outcome.round = i;
            return res;
        }
        pieces.push_back(lifted);
        // Remove the piece and continue.
        VertexSet keep = cur.vertex_set();
        for (int v = local.host_vertices.first(); v >= 0; v = local.host_vertices.next(v))
            keep.reset(v);
        MappedSubgraph nxt = subgraph_induced_mapped(cur, keep);
        std::vector<int> nxt_to_g(nxt.graph.n);
        for (int v = 0; v < nxt.graph.n; ++v) nxt_to_g[v] = cur_to_g[nxt.new_to_old[v]];
        cur = nxt.graph;
        cur_to_g = std::move(nxt_to_g);
    }
    res.outcome.tag = IncrementOutcome::Tag::Pieces;
    res.outcome.pieces = std::move(pieces);
    return res;
}

MappedSubgraph mader_subgraph(const Graph& g) {
    if (g.n == 0 || g.m == 0) throw PreconditionError("mader_subgraph requires at least one edge");
    Rational d = density_of(g);
    int target = (int)((d / Rational(2)).ceil());

    MappedSubgraph cur;
    cur.graph = g;
    cur.new_to_old.resize(g.n);
    cur.old_to_new.resize(g.n);
    for (int v = 0; v < g.n; ++v) cur.new_to_old[v] = cur.old_to_new[v] = v;

    while (true) {
        auto sep = find_min_order_separation(cur.graph, target);
        if (!sep) break;
        Rational da = density_of_subset(cur.graph, sep->A);
        Rational db = density_of_subset(cur.graph, sep->B);
        const VertexSet& keep = da >= db ? sep->A : sep->B;
        MappedSubgraph inner = subgraph_induced_mapped(cur.graph, keep);
        MappedSubgraph next;
        next.graph = inner.graph;
        next.new_to_old.resize(inner.graph.n);
        next.old_to_new.assign(g.n, -1);
        for (int v = 0; v < inner.graph.n; ++v) {
            int orig = cur.new_to_old[inner.new_to_old[v]];
            next.new_to_old[v] = orig;
            next.old_to_new[orig] = v;
        }
        cur = std::move(next);
    }
    if (cur.graph.n > 0 && connectivity(cur.graph) >= target) return cur;

    // Heuristic shortfall: exhaustive over induced subgraphs on small hosts.
    if (g.n > Config::global().mader_exhaustive_cap)
        throw BudgetExceededError("mader peeling failed and host too large for exhaustive search");
    VertexSet best(g.n);
    for (uint64_t bits = 1; bits < (uint64_t{1} << g.n); ++bits) {
        VertexSet s(g.n);
        for (int v = 0; v < g.n; ++v)
            if ((bits >> v) & 1) s.set(v);
        if (s.count() < best.count()) continue;
        Graph sub = subgraph_induced(g, s);
        if (sub.n > 0 && connectivity(sub) >= target) {
            if (s.count() > best.count() || (s.count() == best.count() && s.lex_less(best)))
                best = s;
        }
    }
    if (best.empty()) throw std::logic_error("no subgraph meets the connectivity bound");
    return subgraph_induced_mapped(g, best);
}

}  // namespace minorforge
