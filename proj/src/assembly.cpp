#include "minorforge/assembly.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "minorforge/canonical.hpp"
#include "minorforge/config.hpp"
#include "minorforge/density.hpp"
#include "minorforge/embedding.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/json_io.hpp"

namespace minorforge {

Graph apply_extension(const EdgeExtension& ext) {
    Graph g = ext.base;
    int n = g.n + 0;
    std::vector<Edge> edges = g.edges();
    for (const auto& st : ext.steps) {
        if (st.kind == ExtensionStep::Kind::AttachNew) {
            int nv = n++;
            if (st.to >= 0) {
                if (st.to >= nv) throw OutOfRangeError("extension attaches to a later vertex");
                edges.emplace_back(st.to, nv);
            }
        } else {
            int a = n++, b = n++;
            edges.emplace_back(a, b);
        }
    }
    return build_graph(n, edges, ext.base.label);
}

VertexSet extension_new_vertices(const EdgeExtension& ext) {
    Graph j = apply_extension(ext);
    VertexSet s(j.n);
    for (int v = ext.base.n; v < j.n; ++v) s.set(v);
    return s;
}

VertexSet extension_attachment_points(const EdgeExtension& ext) {
    Graph j = apply_extension(ext);
    VertexSet s(j.n);
    for (const auto& st : ext.steps)
        if (st.kind == ExtensionStep::Kind::AttachNew && st.to >= 0 && st.to < ext.base.n)
            s.set(st.to);
    return s;
}

std::vector<Graph> enumerate_k_extensions(const Graph& h, int k, int cap) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    std::vector<Graph> level{h};
    seen.insert(canonical_form(h));
    out.push_back(h);
    for (int step = 0; step < k; ++step) {
        std::vector<Graph> next;
        for (const Graph& cur : level) {
            std::vector<Graph> children;
            {  // new vertex with no edge
                Graph c(cur.n + 1);
                for (auto [u, v] : cur.edges()) c.add_edge(u, v);
                children.push_back(c);
            }
            for (int t = 0; t < cur.n; ++t) {  // pendant at t
                Graph c(cur.n + 1);
                for (auto [u, v] : cur.edges()) c.add_edge(u, v);
                c.add_edge(t, cur.n);
                children.push_back(c);
            }
            {  // fresh edge on two new vertices
                Graph c(cur.n + 2);
                for (auto [u, v] : cur.edges()) c.add_edge(u, v);
                c.add_edge(cur.n, cur.n + 1);
                children.push_back(c);
            }
            for (Graph& c : children) {
                std::string cf = canonical_form(c);
                if (!seen.insert(cf).second) continue;
                if ((int)out.size() >= cap)
                    throw BudgetExceededError("extension enumeration cap reached");
                out.push_back(c);
                next.push_back(c);
            }
        }
        level = std::move(next);
    }
    return out;
}

LinkedCheck is_H_linked(const Graph& g, const Graph& h, int cap) {
    if (cap < 0) cap = Config::global().hlinked_cap;
    if (g.n > cap) throw BudgetExceededError("H-linked check host exceeds cap");
    LinkedCheck out;
    if (h.n > g.n) {
        out.linked = false;
        return out;
    }
    // All injections V(h) -> V(g), lexicographically.
    std::vector<int> phi(h.n, -1);
    std::vector<char> used(g.n, 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == h.n) {
            RootedSpec spec;
            for (int i = 0; i < h.n; ++i) spec.roots[i] = phi[i];
            return !find_rooted_model(h, g, spec, std::max(g.n, Config::global().minor_cap))
                        .has_value();
        }
        for (int w = 0; w < g.n; ++w) {
            if (used[w]) continue;
            phi[v] = w;
            used[w] = 1;
            if (rec(v + 1)) return true;  // found a failing injection
            used[w] = 0;
            phi[v] = -1;
        }
        return false;
    };
    if (rec(0)) {
        out.linked = false;
        out.failing_injection = phi;
    }
    return out;
}

bool check_corollary_bound(const Graph& g, const Graph& h, int C, std::optional<Rational> bound) {
    Rational b = bound ? *bound : Rational(h.n, 2) - Rational(1);
    return Rational(connectivity(g)) >= Rational(C) * b;
}

namespace {

struct SpecLayout {
    Graph h_minus_f;
    std::vector<int> piece_of;  // h-vertex -> piece index
    std::vector<VertexSet> piece_sets;
    std::vector<VertexSet> host_sets;  // over V(G)
    VertexSet z;                       // union of hosts
};

SpecLayout validate_spec(const PieceAssemblySpec& spec, const Graph& g) {
    if (spec.pieces.size() != spec.hosts.size())
        throw std::invalid_argument("pieces and hosts must pair up");
    SpecLayout lay;
    lay.piece_of.assign(spec.h.n, -1);
    for (size_t i = 0; i < spec.pieces.size(); ++i) {
        VertexSet ps(spec.h.n);
        for (int v : spec.pieces[i]) {
            if (v < 0 || v >= spec.h.n) throw OutOfRangeError("piece vertex out of range");
            if (lay.piece_of[v] != -1) throw std::invalid_argument("pieces overlap");
            lay.piece_of[v] = (int)i;
            ps.set(v);
        }
        lay.piece_sets.push_back(ps);
    }
    for (int v = 0; v < spec.h.n; ++v)
        if (lay.piece_of[v] < 0) throw std::invalid_argument("pieces do not cover V(h)");

    lay.h_minus_f = spec.h;
    for (auto [u, v] : spec.f_edges) {
        if (!spec.h.has_edge(u, v)) throw NotAnEdgeError("F contains a non-edge of h");
        if (lay.piece_of[u] == lay.piece_of[v])
            throw std::invalid_argument("F-edge with both ends in one piece is unsupported");
        lay.h_minus_f.adj[u].reset(v);
        lay.h_minus_f.adj[v].reset(u);
        --lay.h_minus_f.m;
    }
    for (const auto& comp : components(lay.h_minus_f)) {
        int p = lay.piece_of[comp.first()];
        for (int v = comp.first(); v >= 0; v = comp.next(v))
            if (lay.piece_of[v] != p)
                throw std::invalid_argument("piece splits a component of h - F");
    }
    // Non-F edges must stay inside pieces.
    for (auto [u, v] : lay.h_minus_f.edges())
        if (lay.piece_of[u] != lay.piece_of[v])
            throw std::invalid_argument("non-F edge crosses pieces");

    lay.z = VertexSet(g.n);
    for (size_t i = 0; i < spec.hosts.size(); ++i) {
        VertexSet hs(g.n);
        for (int v : spec.hosts[i]) {
            if (v < 0 || v >= g.n) throw OutOfRangeError("host vertex out of range");
            if (lay.z.test(v)) throw std::invalid_argument("hosts overlap");
            hs.set(v);
            lay.z.set(v);
        }
        if (hs.empty()) throw std::invalid_argument("empty host");
        lay.host_sets.push_back(hs);
    }
    return lay;
}

struct HostVisit {
    int host;
    int entry, exit;  // vertices in G coordinates
};

// Maximal host-touch runs of a path, with repeated hosts collapsed so each
// host appears once (everything between two visits of the same host is cut).
std::vector<HostVisit> visit_sequence(const std::vector<int>& path,
                                      const std::vector<int>& host_of) {
    std::vector<HostVisit> runs;
    for (int v : path) {
        int hidx = host_of[v];
        if (hidx < 0) continue;
        if (!runs.empty() && runs.back().host == hidx)
            runs.back().exit = v;
        else
            runs.push_back({hidx, v, v});
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < runs.size() && !changed; ++i)
            for (size_t j = runs.size(); j-- > i + 1;)
                if (runs[j].host == runs[i].host) {
                    runs[i].exit = runs[j].exit;
                    runs.erase(runs.begin() + i + 1, runs.begin() + j + 1);
                    changed = true;
                    break;
                }
    }
    return runs;
}

}  // namespace

AssemblyOutcome assemble_minor_from_pieces(const PieceAssemblySpec& spec, const Graph& g) {
    AssemblyOutcome out;
    SpecLayout lay = validate_spec(spec, g);
    int k = (int)spec.pieces.size();
    int nf = (int)spec.f_edges.size();

    // Density precondition: (G, V(G)\Z) is 2|F|-dense.
    VertexSet x = g.vertex_set() - lay.z;
    DensePairCheck dc = is_dense_pair(g, x, 0, 2 * nf);
    if (!dc)
        throw DensityPreconditionFailed("complement of the hosts is not 2|F|-dense",
                                        *dc.violation);

    std::vector<MappedSubgraph> host_graphs;
    for (int i = 0; i < k; ++i) host_graphs.push_back(subgraph_induced_mapped(g, lay.host_sets[i]));
    std::vector<MappedSubgraph> piece_graphs;
    for (int i = 0; i < k; ++i)
        piece_graphs.push_back(subgraph_induced_mapped(lay.h_minus_f, lay.piece_sets[i]));

    // Degenerate case: no F-edges means independent models per piece.
    if (nf == 0) {
        MinorModel whole;
        whole.pattern = lay.h_minus_f;
        whole.host = g;
        whole.branch_sets.assign(spec.h.n, VertexSet(g.n));
        for (int i = 0; i < k; ++i) {
            auto m = test_minor(piece_graphs[i].graph, host_graphs[i].graph,
                                std::max(host_graphs[i].graph.n, Config::global().minor_cap));
            if (!m) {
                out.note = "no model of piece " + std::to_string(i) + " in its host";
                return out;
            }
            for (int lv = 0; lv < piece_graphs[i].graph.n; ++lv)
                for (int w = m->branch_sets[lv].first(); w >= 0; w = m->branch_sets[lv].next(w))
                    whole.branch_sets[piece_graphs[i].new_to_old[lv]].set(
                        host_graphs[i].new_to_old[w]);
        }
        if (!verify_model(whole)) throw std::logic_error("piecewise union model invalid");
        out.model = whole;
        return out;
    }

    // Linkage precondition: every host is (H_i + |F|)-linked, checked
    // exhaustively unless waived.
    if (!spec.best_effort) {
        for (int i = 0; i < k; ++i) {
            auto exts = enumerate_k_extensions(piece_graphs[i].graph, nf);
            for (const Graph& ext : exts) {
                LinkedCheck lc = is_H_linked(host_graphs[i].graph, ext,
                                             std::max(host_graphs[i].graph.n,
                                                      Config::global().hlinked_cap));
                if (!lc) {
                    out.note = "host " + std::to_string(i) +
                               " is not linked for one of its required extensions";
                    return out;
                }
            }
        }
    }

    // U: the 2|F| lowest-id vertices of host 1.
    if (lay.host_sets[0].count() < 2 * nf) {
        out.note = "host 0 has fewer than 2|F| vertices";
        return out;
    }
    VertexSet u_set(g.n);
    {
        int got = 0;
        for (int v = lay.host_sets[0].first(); v >= 0 && got < 2 * nf;
             v = lay.host_sets[0].next(v)) {
            u_set.set(v);
            ++got;
        }
    }
    // W: one terminal r_t in u's host and s_t in v's host per F-edge,
    // all distinct, lowest ids first.
    VertexSet w_set(g.n);
    std::vector<int> r_of(nf, -1), s_of(nf, -1);
    {
        VertexSet allocated(g.n);
        auto allocate = [&](int host) {
            for (int v = lay.host_sets[host].first(); v >= 0; v = lay.host_sets[host].next(v))
                if (!allocated.test(v)) {
                    allocated.set(v);
                    return v;
                }
            return -1;
        };
        for (int t = 0; t < nf; ++t) {
            auto [hu, hv] = spec.f_edges[t];
            r_of[t] = allocate(lay.piece_of[hu]);
            s_of[t] = allocate(lay.piece_of[hv]);
            if (r_of[t] < 0 || s_of[t] < 0) {
                out.note = "host too small to allocate distinct terminals";
                return out;
            }
            w_set.set(r_of[t]);
            w_set.set(s_of[t]);
        }
    }
    out.trace["U"] = vertex_set_to_json(u_set);
    out.trace["W"] = vertex_set_to_json(w_set);

    // Menger routing, preferring routes that avoid the interior of host 0.
    std::vector<std::vector<int>> menger;  // each path from its U end to its W end
    {
        VertexSet interior0 = lay.host_sets[0] - (u_set | w_set);
        for (int attempt = 0; attempt < 2; ++attempt) {
            VertexSet keep =
                attempt == 0 ? g.vertex_set() - interior0 : g.vertex_set();
            MappedSubgraph sub = subgraph_induced_mapped(g, keep);
            VertexSet su(sub.graph.n), sw(sub.graph.n);
            for (int v = u_set.first(); v >= 0; v = u_set.next(v)) su.set(sub.old_to_new[v]);
            for (int v = w_set.first(); v >= 0; v = w_set.next(v)) sw.set(sub.old_to_new[v]);
            MengerResult mr = menger_paths(sub.graph, su, sw, 2 * nf);
            if (!mr.separation) {
                for (auto& p : mr.paths) {
                    std::vector<int> lifted;
                    for (int v : p) lifted.push_back(sub.new_to_old[v]);
                    menger.push_back(std::move(lifted));
                }
                break;
            }
            if (attempt == 1) {
                out.note = "Menger routing between U and W failed";
                return out;
            }
        }
    }
    std::map<int, int> path_ending_at;  // W vertex -> index into menger
    for (size_t i = 0; i < menger.size(); ++i) path_ending_at[menger[i].back()] = (int)i;

    // T paths: |F| disjoint U-end to U-end connections inside host 0,
    // avoiding foreign terminals, found as a rooted model of a matching.
    std::vector<std::vector<int>> t_paths(nf);
    {
        std::vector<int> rp(nf), sp(nf);
        for (int t = 0; t < nf; ++t) {
            auto itr = path_ending_at.find(r_of[t]);
            auto its = path_ending_at.find(s_of[t]);
            if (itr == path_ending_at.end() || its == path_ending_at.end()) {
                out.note = "a terminal is not an endpoint of any Menger path";
                return out;
            }
            rp[t] = menger[itr->second].front();
            sp[t] = menger[its->second].front();
        }
        VertexSet allowed = lay.host_sets[0] - (w_set - u_set);
        MappedSubgraph sub = subgraph_induced_mapped(g, allowed);
        Graph matching_pattern(2 * nf);
        RootedSpec rs;
        for (int t = 0; t < nf; ++t) {
            matching_pattern.add_edge(2 * t, 2 * t + 1);
            rs.roots[2 * t] = sub.old_to_new[rp[t]];
            rs.roots[2 * t + 1] = sub.old_to_new[sp[t]];
        }
        auto tm = find_rooted_model(matching_pattern, sub.graph, rs,
                                    std::max(sub.graph.n, Config::global().minor_cap));
        if (!tm) {
            out.note = "no disjoint connection system inside host 0";
            return out;
        }
        for (int t = 0; t < nf; ++t) {
            VertexSet within = tm->branch_sets[2 * t] | tm->branch_sets[2 * t + 1];
            std::vector<int> local =
                shortest_path(sub.graph, sub.old_to_new[rp[t]], sub.old_to_new[sp[t]], within);
            if (local.empty()) throw std::logic_error("T connection path missing");
            std::vector<int>& tp = t_paths[t];
            for (int v : local) tp.push_back(sub.new_to_old[v]);
        }
    }

    // P_t = reverse(R_t) + T_t + S_t, then BFS-shortened within its own
    // vertex set.
    std::vector<std::vector<int>> big_paths(nf);
    std::vector<int> host_of(g.n, -1);
    for (int i = 0; i < k; ++i)
        for (int v = lay.host_sets[i].first(); v >= 0; v = lay.host_sets[i].next(v)) host_of[v] = i;
    for (int t = 0; t < nf; ++t) {
        std::vector<int> p;
        const auto& r_path = menger[path_ending_at[r_of[t]]];
        const auto& s_path = menger[path_ending_at[s_of[t]]];
        p.assign(r_path.rbegin(), r_path.rend());  // r_of[t] ... U end
        for (size_t i = 1; i < t_paths[t].size(); ++i) p.push_back(t_paths[t][i]);
        for (size_t i = 1; i < s_path.size(); ++i) p.push_back(s_path[i]);
        VertexSet within = VertexSet::of(g.n, p);
        std::vector<int> shortened = shortest_path(g, p.front(), p.back(), within);
        if (shortened.empty()) throw std::logic_error("path shortening failed");
        big_paths[t] = shortened;
        out.trace["paths"].push_back(shortened);
    }

    // Visit sequences and per-host extension bookkeeping.
    struct ExtVertex {
        int f_index;
        char role;  // 'p' (outgoing / pendant at u) or 'q' (incoming / pendant at v)
        int root;   // G vertex
        int anchor; // h-vertex for pendants, -1 otherwise
        int pair_with = -1;  // local index of the partner for in/out pairs
    };
    std::vector<std::vector<ExtVertex>> host_ext(k);
    for (int t = 0; t < nf; ++t) {
        auto [hu, hv] = spec.f_edges[t];
        // Auxiliary host-adjacency pairs before collapsing repeats.
        {
            nlohmann::json jedges = nlohmann::json::array();
            int prev = -1;
            for (int v : big_paths[t]) {
                int hidx = host_of[v];
                if (hidx < 0) continue;
                if (prev >= 0 && prev != hidx) jedges.push_back({prev, hidx});
                prev = hidx;
            }
            out.trace["J"].push_back(jedges);
        }
        std::vector<HostVisit> runs = visit_sequence(big_paths[t], host_of);
        if (runs.empty() || runs.front().host != lay.piece_of[hu] ||
            runs.back().host != lay.piece_of[hv])
            throw std::logic_error("path visit sequence does not join the right hosts");
        nlohmann::json iseq = nlohmann::json::array();
        for (const auto& r : runs) iseq.push_back(r.host);
        out.trace["I"].push_back(iseq);
        for (size_t ri = 0; ri < runs.size(); ++ri) {
            const HostVisit& run = runs[ri];
            auto& exts = host_ext[run.host];
            if (ri == 0) {
                exts.push_back({t, 'p', run.exit, hu, -1});
            } else if (ri + 1 == runs.size()) {
                exts.push_back({t, 'q', run.entry, hv, -1});
            } else if (run.entry == run.exit) {
                exts.push_back({t, 'q', run.entry, -1, -1});
            } else {
                int base = (int)exts.size();
                exts.push_back({t, 'q', run.entry, -1, base + 1});
                exts.push_back({t, 'p', run.exit, -1, base});
            }
        }
    }

    // Rooted models of the extended pieces.
    MinorModel skeleton;
    skeleton.pattern = lay.h_minus_f;
    skeleton.host = g;
    skeleton.branch_sets.assign(spec.h.n, VertexSet(g.n));
    // Branch sets of the extension vertices, per F-edge, in walk order.
    std::vector<std::vector<VertexSet>> ext_sets(nf);
    std::vector<std::vector<char>> ext_roles(nf);
    for (int i = 0; i < k; ++i) {
        const auto& pg = piece_graphs[i];
        const auto& hg = host_graphs[i];
        int base_n = pg.graph.n;
        Graph pattern(base_n + (int)host_ext[i].size());
        for (auto [a, b] : pg.graph.edges()) pattern.add_edge(a, b);
        RootedSpec rs;
        VertexSet root_used(hg.graph.n);
        for (size_t e = 0; e < host_ext[i].size(); ++e) {
            const ExtVertex& ev = host_ext[i][e];
            int pv = base_n + (int)e;
            if (ev.anchor >= 0) pattern.add_edge(pg.old_to_new[ev.anchor], pv);
            if (ev.pair_with >= 0 && ev.pair_with < (int)e)
                pattern.add_edge(base_n + ev.pair_with, pv);
            int local_root = hg.old_to_new[ev.root];
            rs.roots[pv] = local_root;
            root_used.set(local_root);
        }
        auto mm = find_rooted_model(pattern, hg.graph, rs,
                                    std::max(hg.graph.n, Config::global().minor_cap));
        if (!mm) {
            out.note = "no rooted model of the extended piece in host " + std::to_string(i);
            return out;
        }
        out.trace["extensions"].push_back(graph_to_json(pattern));
        out.trace["models"].push_back(model_to_json(*mm));
        for (int lv = 0; lv < base_n; ++lv)
            for (int w = mm->branch_sets[lv].first(); w >= 0; w = mm->branch_sets[lv].next(w))
                skeleton.branch_sets[pg.new_to_old[lv]].set(hg.new_to_old[w]);
        for (size_t e = 0; e < host_ext[i].size(); ++e) {
            const ExtVertex& ev = host_ext[i][e];
            VertexSet lifted(g.n);
            for (int w = mm->branch_sets[base_n + (int)e].first(); w >= 0;
                 w = mm->branch_sets[base_n + (int)e].next(w))
                lifted.set(hg.new_to_old[w]);
            ext_sets[ev.f_index].push_back(lifted);
            ext_roles[ev.f_index].push_back(ev.role);
        }
    }
    if (!verify_model(skeleton)) throw std::logic_error("skeleton model of h - F invalid");

    // Q paths through the reserved corridors.
    VertexSet all_branch(g.n);
    for (const auto& s : skeleton.branch_sets) all_branch |= s;
    std::vector<std::vector<int>> q_paths(nf);
    for (int t = 0; t < nf; ++t) {
        auto [hu, hv] = spec.f_edges[t];
        VertexSet corridor = VertexSet::of(g.n, big_paths[t]) - lay.z;
        for (const auto& s : ext_sets[t]) corridor |= s;
        corridor -= all_branch;
        // One end adjacent to mu(u), the other adjacent to mu(v).
        VertexSet from = neighborhood(g, skeleton.branch_sets[hu]) & corridor;
        VertexSet to = neighborhood(g, skeleton.branch_sets[hv]) & corridor;
        std::vector<int> interior;
        if (from.empty() || to.empty()) {
            out.note = "no corridor entry adjacent to an endpoint branch set";
            return out;
        }
        {
            // BFS inside the corridor from `from` to `to`.
            std::vector<int> par(g.n, -2);
            std::vector<int> queue;
            for (int v = from.first(); v >= 0; v = from.next(v)) {
                par[v] = -1;
                queue.push_back(v);
            }
            int hit = -1;
            for (size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
                int v = queue[qi];
                if (to.test(v)) {
                    hit = v;
                    break;
                }
                for (int w = (g.adj[v] & corridor).first(); w >= 0;
                     w = (g.adj[v] & corridor).next(w))
                    if (par[w] == -2) {
                        par[w] = v;
                        queue.push_back(w);
                    }
            }
            if (hit < 0) {
                out.note = "corridor for an F-edge is disconnected";
                return out;
            }
            for (int v = hit; v >= 0; v = par[v]) interior.push_back(v);
            std::reverse(interior.begin(), interior.end());
        }
        int a = -1, b = -1;
        for (int v = skeleton.branch_sets[hu].first(); v >= 0;
             v = skeleton.branch_sets[hu].next(v))
            if (g.has_edge(v, interior.front())) {
                a = v;
                break;
            }
        for (int v = skeleton.branch_sets[hv].first(); v >= 0;
             v = skeleton.branch_sets[hv].next(v))
            if (g.has_edge(v, interior.back())) {
                b = v;
                break;
            }
        if (a < 0 || b < 0) throw std::logic_error("corridor endpoints lost their anchors");
        q_paths[t].push_back(a);
        for (int v : interior) q_paths[t].push_back(v);
        q_paths[t].push_back(b);
        out.trace["Q"].push_back(q_paths[t]);
    }

    MinorModel final_model = extend_model_with_paths(skeleton, spec.h, spec.f_edges, q_paths);
    out.model = final_model;
    return out;
}

AssemblyOutcome assemble_via_dense_cores(const PieceAssemblySpec& spec, const Graph& g) {
    PieceAssemblySpec shrunk = spec;
    nlohmann::json shrink_note = nlohmann::json::array();
    for (size_t i = 0; i < spec.hosts.size(); ++i) {
        VertexSet hs = VertexSet::of(g.n, spec.hosts[i]);
        MappedSubgraph host = subgraph_induced_mapped(g, hs);
        if (host.graph.m == 0) {
            shrink_note.push_back({{"host", i}, {"kept", spec.hosts[i].size()}});
            continue;
        }
        MappedSubgraph dense = mader_subgraph(host.graph);
        std::vector<int> lifted;
        for (int v = 0; v < dense.graph.n; ++v)
            lifted.push_back(host.new_to_old[dense.new_to_old[v]]);
        std::sort(lifted.begin(), lifted.end());
        shrunk.hosts[i] = lifted;
        shrink_note.push_back({{"host", i}, {"kept", lifted.size()}});
    }
    AssemblyOutcome out = assemble_minor_from_pieces(shrunk, g);
    out.trace["mader"] = shrink_note;
    return out;
}

std::optional<MinorModel> extension_extremal_embed(const EdgeExtension& ext, const Graph& g) {
    Graph j = apply_extension(ext);
    if (g.n < j.n) return std::nullopt;
    VertexSet a = extension_new_vertices(ext);
    VertexSet b = extension_attachment_points(ext);
    if (a.empty()) {
        auto m = test_minor(j, g, std::max(g.n, Config::global().minor_cap));
        return m;
    }

    // J' = J[A ∪ B] - E(J[B]) is a forest by construction.
    MappedSubgraph jp = subgraph_induced_mapped(j, a | b);
    Graph forest(jp.graph.n);
    for (auto [u, v] : jp.graph.edges()) {
        int ou = jp.new_to_old[u], ov = jp.new_to_old[v];
        if (b.test(ou) && b.test(ov)) continue;
        forest.add_edge(u, v);
    }
    if (!is_forest(forest)) throw std::logic_error("extension skeleton is not a forest");

    std::vector<int> phi_forest = greedy_forest_embed(forest, g, VertexSet(g.n));

    VertexSet a_image(g.n);
    for (int v = a.first(); v >= 0; v = a.next(v)) a_image.set(phi_forest[jp.old_to_new[v]]);
    MappedSubgraph rest = delete_vertices(g, a_image);
    RootedSpec rs;
    for (int v = b.first(); v >= 0; v = b.next(v))
        rs.roots[v] = rest.old_to_new[phi_forest[jp.old_to_new[v]]];
    auto base_model = find_rooted_model(ext.base, rest.graph, rs,
                                        std::max(rest.graph.n, Config::global().minor_cap));
    if (!base_model) return std::nullopt;

    MinorModel model;
    model.pattern = j;
    model.host = g;
    model.branch_sets.assign(j.n, VertexSet(g.n));
    for (int v = 0; v < ext.base.n; ++v)
        for (int w = base_model->branch_sets[v].first(); w >= 0;
             w = base_model->branch_sets[v].next(w))
            model.branch_sets[v].set(rest.new_to_old[w]);
    for (int v = a.first(); v >= 0; v = a.next(v))
        model.branch_sets[v].set(phi_forest[jp.old_to_new[v]]);
    VerifyResult vr = verify_model(model);
    if (!vr) throw std::logic_error("extension embedding model invalid: " + vr.reason);
    return model;
}

}  // namespace minorforge
