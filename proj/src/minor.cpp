#include "minorforge/minor.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "minorforge/canonical.hpp"
#include "minorforge/config.hpp"
#include "minorforge/errors.hpp"

namespace minorforge {

VerifyResult verify_model(const MinorModel& m) {
    if ((int)m.branch_sets.size() != m.pattern.n)
        throw std::invalid_argument("branch_sets domain does not match V(pattern)");
    VerifyResult r;
    auto fail = [&](std::string why, int a, int b) {
        r.ok = false;
        r.reason = std::move(why);
        r.a = a;
        r.b = b;
        return r;
    };
    for (int v = 0; v < m.pattern.n; ++v) {
        if (m.branch_sets[v].empty()) return fail("empty branch set", v, -1);
        for (int x = m.branch_sets[v].first(); x >= 0; x = m.branch_sets[v].next(x))
            if (x >= m.host.n) return fail("branch set vertex outside host", v, x);
    }
    for (int u = 0; u < m.pattern.n; ++u)
        for (int v = u + 1; v < m.pattern.n; ++v)
            if (m.branch_sets[u].intersects(m.branch_sets[v])) return fail("overlap", u, v);
    for (int v = 0; v < m.pattern.n; ++v)
        if (!is_connected_subset(m.host, m.branch_sets[v]))
            return fail("disconnected branch set", v, -1);
    for (auto [u, v] : m.pattern.edges())
        if (!neighborhood(m.host, m.branch_sets[u]).intersects(m.branch_sets[v]))
            return fail("unrealized pattern edge", u, v);
    return r;
}

long long model_host_edge_count(const MinorModel& m) {
    long long total = 0;
    for (int v = 0; v < m.pattern.n; ++v) {
        const VertexSet& s = m.branch_sets[v];
        for (int x = s.first(); x >= 0; x = s.next(x))
            for (int y = (m.host.adj[x] & s).next(x); y >= 0; y = (m.host.adj[x] & s).next(y))
                ++total;
    }
    for (auto [u, v] : m.pattern.edges()) {
        bool found = false;
        const VertexSet& su = m.branch_sets[u];
        for (int x = su.first(); x >= 0 && !found; x = su.next(x))
            if (m.host.adj[x].intersects(m.branch_sets[v])) found = true;
        if (found) ++total;
    }
    return total;
}

namespace {

// Branch-and-bound over partial branch-set assignments. Works on uint64
// masks, so the host is limited to 64 vertices (the exactness cap is far
// below that anyway).
struct ModelSearch {
    const Graph& h;
    const Graph& g;
    std::vector<uint64_t> gadj;
    uint64_t all;
    std::vector<int> order;        // h-vertices in placement order
    std::vector<int> root_of;      // h-vertex -> pinned host vertex or -1
    std::vector<uint64_t> mu;      // branch set per h-vertex
    std::vector<char> placed;
    uint64_t used = 0;
    uint64_t reserved = 0;  // roots of not-yet-placed pinned vertices
    int64_t nodes_left;

    ModelSearch(const Graph& h_, const Graph& g_, const std::map<int, int>& roots)
        : h(h_), g(g_), nodes_left(Config::global().node_budget) {
        gadj.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            for (int u = g.adj[v].first(); u >= 0; u = g.adj[v].next(u)) gadj[v] |= uint64_t{1} << u;
        all = g.n == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n) - 1;
        root_of.assign(h.n, -1);
        for (auto [hv, gv] : roots) {
            root_of[hv] = gv;
            reserved |= uint64_t{1} << gv;
        }
        mu.assign(h.n, 0);
        placed.assign(h.n, 0);
        order.resize(h.n);
        for (int v = 0; v < h.n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            bool pa = root_of[a] >= 0, pb = root_of[b] >= 0;
            if (pa != pb) return pa;
            if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
            return a < b;
        });
    }

    uint64_t nbr_mask(uint64_t s) const {
        uint64_t out = 0;
        while (s) {
            int v = __builtin_ctzll(s);
            s &= s - 1;
            out |= gadj[v];
        }
        return out;
    }

    void tick() {
        if (--nodes_left < 0) throw BudgetExceededError("minor search node budget exhausted");
    }

    // True iff S can serve as the branch set of h-vertex v right now.
    bool admissible(int v, uint64_t nbrs) const {
        for (int u = h.adj[v].first(); u >= 0; u = h.adj[v].next(u))
            if (placed[u] && !(nbrs & mu[u])) return false;
        return true;
    }

    bool commit_and_descend(int k, int v, uint64_t s) {
        mu[v] = s;
        placed[v] = 1;
        used |= s;
        bool ok = true;
        // Every placed vertex with an unplaced pattern neighbour must keep a
        // reachable host vertex outside the used set.
        for (int u = 0; u < h.n && ok; ++u) {
            if (!placed[u]) continue;
            bool open = false;
            for (int w = h.adj[u].first(); w >= 0; w = h.adj[u].next(w))
                if (!placed[w]) {
                    open = true;
                    break;
                }
            if (open && !(nbr_mask(mu[u]) & all & ~used)) ok = false;
        }
        if (ok) ok = place(k + 1);
        if (!ok) {
            used &= ~s;
            placed[v] = 0;
            mu[v] = 0;
        }
        return ok;
    }

    // Enumerates connected subsets of `allowed` containing everything in S,
    // each exactly once, committing admissible ones.
    bool grow(int k, int v, uint64_t s, int sz, int maxsz, uint64_t ext, uint64_t forb,
              uint64_t nbrs, uint64_t allowed) {
        tick();
        if (admissible(v, nbrs) && commit_and_descend(k, v, s)) return true;
        if (sz >= maxsz) return false;
        uint64_t cand = ext;
        uint64_t banned = forb;
        while (cand) {
            int c = __builtin_ctzll(cand);
            uint64_t cb = uint64_t{1} << c;
            cand &= ~cb;
            uint64_t s2 = s | cb;
            uint64_t ext2 = cand | (gadj[c] & allowed & ~s2 & ~banned);
            if (grow(k, v, s2, sz + 1, maxsz, ext2, banned, nbrs | gadj[c], allowed)) return true;
            banned |= cb;
        }
        return false;
    }

    bool place(int k) {
        if (k == h.n) return true;
        tick();
        int v = order[k];
        int remaining_after = h.n - k - 1;
        uint64_t my_root = root_of[v] >= 0 ? uint64_t{1} << root_of[v] : 0;
        reserved &= ~my_root;
        uint64_t avail = all & ~used & ~reserved;
        int maxsz = g.n - __builtin_popcountll(used) - remaining_after;
        bool found = false;
        if (maxsz >= 1) {
            if (my_root) {
                if (avail & my_root) {
                    int r = root_of[v];
                    found = grow(k, v, my_root, 1, maxsz, gadj[r] & avail & ~my_root, 0, gadj[r],
                                 avail);
                }
            } else {
                uint64_t seeds = avail;
                while (seeds && !found) {
                    int w = __builtin_ctzll(seeds);
                    uint64_t wb = uint64_t{1} << w;
                    seeds &= ~wb;
                    uint64_t allowed = avail & ~(wb - 1);
                    found = grow(k, v, wb, 1, maxsz, gadj[w] & allowed & ~wb, 0, gadj[w], allowed);
                }
            }
        }
        if (!found) reserved |= my_root;
        return found;
    }
};

MinorModel build_model(const Graph& h, const Graph& g, const std::vector<uint64_t>& mu) {
    MinorModel m{h, g, {}};
    m.branch_sets.reserve(h.n);
    for (int v = 0; v < h.n; ++v) {
        VertexSet s(g.n);
        uint64_t w = mu[v];
        while (w) {
            s.set(__builtin_ctzll(w));
            w &= w - 1;
        }
        m.branch_sets.push_back(s);
    }
    return m;
}

int effective_cap(int cap) { return cap < 0 ? Config::global().minor_cap : cap; }

std::optional<MinorModel> search_model(const Graph& h, const Graph& g,
                                       const std::map<int, int>& roots, int cap) {
    cap = effective_cap(cap);
    if (g.n > cap || g.n > 64)
        throw BudgetExceededError("host order " + std::to_string(g.n) +
                                  " exceeds minor search cap " + std::to_string(std::min(cap, 64)));
    if (h.n > g.n || h.m > g.m) return std::nullopt;
    if (h.n == 0) return MinorModel{h, g, {}};
    ModelSearch ms(h, g, roots);
    if (!ms.place(0)) return std::nullopt;
    MinorModel m = build_model(h, g, ms.mu);
    if (!verify_model(m)) throw std::logic_error("minor search produced an invalid model");
    return m;
}

}  // namespace

std::optional<MinorModel> test_minor(const Graph& h, const Graph& g, int cap) {
    return search_model(h, g, {}, cap);
}

std::optional<MinorModel> find_rooted_model(const Graph& h, const Graph& g, const RootedSpec& spec,
                                            int cap) {
    std::set<int> images;
    for (auto [hv, gv] : spec.roots) {
        if (hv < 0 || hv >= h.n || gv < 0 || gv >= g.n)
            throw OutOfRangeError("rooted spec vertex out of range");
        if (!images.insert(gv).second) throw std::invalid_argument("rooted spec not injective");
    }
    return search_model(h, g, spec.roots, cap);
}

namespace {

struct SubisoSearch {
    const Graph& h;
    const Graph& g;
    std::vector<uint64_t> gadj, hadj;
    uint64_t avail;  // not forbidden, not used
    std::vector<int> order;
    std::vector<int> phi;
    int64_t nodes_left;

    SubisoSearch(const Graph& h_, const Graph& g_, const VertexSet& forbidden,
                 const std::map<int, int>& pinned)
        : h(h_), g(g_), nodes_left(Config::global().node_budget) {
        gadj.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            for (int u = g.adj[v].first(); u >= 0; u = g.adj[v].next(u)) gadj[v] |= uint64_t{1} << u;
        hadj.assign(h.n, 0);
        for (int v = 0; v < h.n; ++v)
            for (int u = h.adj[v].first(); u >= 0; u = h.adj[v].next(u)) hadj[v] |= uint64_t{1} << u;
        avail = g.n == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n) - 1;
        for (int v = forbidden.first(); v >= 0; v = forbidden.next(v)) avail &= ~(uint64_t{1} << v);
        phi.assign(h.n, -1);
        for (auto [hv, gv] : pinned) {
            phi[hv] = gv;
            avail &= ~(uint64_t{1} << gv);
        }
        order.clear();
        for (int v = 0; v < h.n; ++v)
            if (phi[v] < 0) order.push_back(v);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
            return a < b;
        });
    }

    bool consistent(int v, int w) const {
        if (g.degree(w) < h.degree(v)) return false;
        for (int u = h.adj[v].first(); u >= 0; u = h.adj[v].next(u))
            if (phi[u] >= 0 && !(gadj[w] & (uint64_t{1} << phi[u]))) return false;
        return true;
    }

    bool rec(size_t k) {
        if (--nodes_left < 0) throw BudgetExceededError("subgraph search node budget exhausted");
        if (k == order.size()) return true;
        int v = order[k];
        uint64_t cand = avail;
        while (cand) {
            int w = __builtin_ctzll(cand);
            uint64_t wb = uint64_t{1} << w;
            cand &= ~wb;
            if (!consistent(v, w)) continue;
            phi[v] = w;
            avail &= ~wb;
            if (rec(k + 1)) return true;
            avail |= wb;
            phi[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_subgraph_iso(const Graph& h, const Graph& g,
                                                  const VertexSet& forbidden,
                                                  const std::map<int, int>& pinned) {
    if (g.n > 64) throw BudgetExceededError("subgraph search host exceeds 64 vertices");
    for (auto [hv, gv] : pinned) {
        if (hv < 0 || hv >= h.n || gv < 0 || gv >= g.n)
            throw OutOfRangeError("pinned vertex out of range");
        for (auto [hv2, gv2] : pinned) {
            if (hv2 == hv) continue;
            if (gv2 == gv) throw std::invalid_argument("pinned map not injective");
            if (h.has_edge(hv, hv2) && !g.has_edge(gv, gv2))
                return std::nullopt;  // pinned part is not a partial homomorphism
        }
        if (forbidden.test(gv)) return std::nullopt;
    }
    int free_needed = h.n - (int)pinned.size();
    if (g.n - forbidden.count() - (int)pinned.size() < free_needed) return std::nullopt;
    SubisoSearch ss(h, g, forbidden, pinned);
    if (!ss.rec(0)) return std::nullopt;
    return ss.phi;
}

std::optional<std::vector<int>> find_subgraph_iso(const Graph& h, const Graph& g) {
    return find_subgraph_iso(h, g, VertexSet(g.n), {});
}

namespace {

struct Oracle2 {
    const Graph& h;
    std::string canon_h;
    int64_t nodes_left;
    std::unordered_map<std::string, bool>& memo;

    Oracle2(const Graph& h_, std::unordered_map<std::string, bool>& memo_)
        : h(h_), canon_h(canonical_form(h_)), nodes_left(Config::global().node_budget),
          memo(memo_) {}

    bool rec(const Graph& g, const std::string& canon_g) {
        if (h.n == 0) return true;
        if (h.n > g.n || h.m > g.m) return false;
        if (--nodes_left < 0) throw BudgetExceededError("recursive oracle budget exhausted");
        std::string key = canon_h + '|' + canon_g;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ans = false;
        if (find_subgraph_iso(h, g).has_value()) {
            ans = true;
        } else {
            std::set<std::string> seen;
            for (auto [u, v] : g.edges()) {
                Graph gc = contract_edge(g, u, v).graph;
                std::string cf = canonical_form(gc);
                if (!seen.insert(cf).second) continue;
                if (rec(gc, cf)) {
                    ans = true;
                    break;
                }
            }
            if (!ans && g.n > h.n) {
                VertexSet one(g.n);
                for (int v = 0; v < g.n && !ans; ++v) {
                    one.clear();
                    one.set(v);
                    Graph gd = delete_vertices(g, one).graph;
                    std::string cf = canonical_form(gd);
                    if (!seen.insert(cf).second) continue;
                    if (rec(gd, cf)) ans = true;
                }
            }
        }
        memo[key] = ans;
        return ans;
    }
};

}  // namespace

bool test_minor_oracle2(const Graph& h, const Graph& g, int cap) {
    cap = effective_cap(cap);
    if (g.n > cap)
        throw BudgetExceededError("host order exceeds recursive oracle cap");
    static std::unordered_map<std::string, bool> memo;
    if (memo.size() > 4000000) memo.clear();
    Oracle2 o(h, memo);
    return o.rec(g, canonical_form(g));
}

MinorModel extend_model_with_paths(const MinorModel& m, const Graph& h_full,
                                   const std::vector<Edge>& f_edges,
                                   const std::vector<std::vector<int>>& paths) {
    if (f_edges.size() != paths.size())
        throw PathViolationError("one path required per F-edge");
    if (m.pattern.n != h_full.n)
        throw std::invalid_argument("model pattern and full pattern disagree on vertex count");

    VertexSet all_branch(m.host.n);
    for (const auto& s : m.branch_sets) all_branch |= s;

    // Validate every path against the extension conditions first.
    VertexSet interiors_seen(m.host.n);
    for (size_t i = 0; i < paths.size(); ++i) {
        auto [u, v] = f_edges[i];
        const auto& p = paths[i];
        if (!h_full.has_edge(u, v)) throw PathViolationError("F pair is not an edge of the pattern");
        if (p.size() < 2) throw PathViolationError("path " + std::to_string((int)i) + " too short");
        for (size_t j = 0; j + 1 < p.size(); ++j)
            if (!m.host.has_edge(p[j], p[j + 1]))
                throw PathViolationError("path " + std::to_string((int)i) + " uses a non-edge");
        if (!m.branch_sets[u].test(p.front()) || !m.branch_sets[v].test(p.back()))
            throw PathViolationError("path " + std::to_string((int)i) +
                                     " ends outside its branch sets");
        for (size_t j = 1; j + 1 < p.size(); ++j) {
            int x = p[j];
            if (all_branch.test(x))
                throw PathViolationError("path " + std::to_string((int)i) +
                                         " interior meets a branch set at " + std::to_string(x));
            if (interiors_seen.test(x))
                throw PathViolationError("paths share interior vertex " + std::to_string(x));
            interiors_seen.set(x);
        }
    }

    MinorModel out{h_full, m.host, m.branch_sets};
    for (size_t i = 0; i < paths.size(); ++i) {
        auto [u, v] = f_edges[i];
        (void)v;
        const auto& p = paths[i];
        // Absorb the path minus its far end into the u-side branch set.
        for (size_t j = 0; j + 1 < p.size(); ++j) out.branch_sets[u].set(p[j]);
    }
    VerifyResult vr = verify_model(out);
    if (!vr) throw PathViolationError("extended model invalid: " + vr.reason);
    return out;
}

}  // namespace minorforge
