#include "minorforge/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "minorforge/config.hpp"
#include "minorforge/errors.hpp"

namespace minorforge {

Graph build_graph(int n, const std::vector<Edge>& edges, std::string label) {
    if (n < 0 || n > VertexSet::kMaxBits)
        throw OutOfRangeError("vertex count out of range: " + std::to_string(n));
    Graph g(n, std::move(label));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw OutOfRangeError("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
        if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.v = g.n;
    s.e = g.m;
    if (g.n > 0) {
        s.min_degree = g.n;
        for (int v = 0; v < g.n; ++v) {
            int d = g.degree(v);
            s.min_degree = std::min(s.min_degree, d);
            s.max_degree = std::max(s.max_degree, d);
        }
        s.density = Rational(g.m, g.n);
    }

    // Degeneracy by repeated min-degree removal.
    VertexSet alive = g.vertex_set();
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    int remaining = g.n;
    while (remaining > 0) {
        int best = -1;
        for (int v = alive.first(); v >= 0; v = alive.next(v))
            if (best < 0 || deg[v] < deg[best]) best = v;
        s.degeneracy = std::max(s.degeneracy, deg[best]);
        alive.reset(best);
        --remaining;
        for (int u = (g.adj[best] & alive).first(); u >= 0; u = (g.adj[best] & alive).next(u))
            --deg[u];
    }

    s.is_bipartite = bipartite_sides(g).has_value();
    for (const auto& c : components(g)) s.max_component_size = std::max(s.max_component_size, c.count());
    return s;
}

Graph null_graph() { return Graph(0, "O"); }

Graph edgeless(int n) { return Graph(n); }

Graph complete(int t) {
    Graph g(t, "K" + std::to_string(t));
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int s, int t) {
    Graph g(s + t, "K" + std::to_string(s) + "," + std::to_string(t));
    for (int u = 0; u < s; ++u)
        for (int v = s; v < s + t; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    Graph g(n);
    int a0 = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        int b0 = a0 + parts[i];
        for (int u = a0; u < b0; ++u)
            for (int v = b0; v < n; ++v) g.add_edge(u, v);
        a0 = b0;
    }
    return g;
}

Graph path_graph(int n) {
    Graph g(n, "P" + std::to_string(n));
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.label = "C" + std::to_string(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph petersen() {
    Graph g(10, "Petersen");
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.n;
    Graph g(n);
    int off = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(off + u, off + v);
        off += p.n;
    }
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph random_gnp(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

Graph regular_high_girth(int d, int girth_min, int n, uint64_t seed) {
    if (d < 0 || n < 0 || (int64_t)n * d % 2 != 0 || d >= n)
        throw InfeasibleParametersError("no " + std::to_string(d) + "-regular graph on " +
                                        std::to_string(n) + " vertices");
    std::mt19937_64 rng(seed);
    int budget = Config::global().girth_retry_budget;
    std::vector<int> stubs(size_t(n) * d);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs[size_t(v) * d + k] = v;
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph g(n);
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v)) {
                ok = false;
                break;
            }
            g.add_edge(u, v);
        }
        if (!ok) continue;
        int gi = girth(g);
        if (gi == 0 || gi > girth_min) {
            // d >= 2 forces a cycle, so gi == 0 only happens for forests (d <= 1).
            for (int v = 0; v < n; ++v)
                if (g.degree(v) != d) throw InfeasibleParametersError("regularity check failed");
            g.label = std::to_string(d) + "-regular girth>" + std::to_string(girth_min);
            return g;
        }
    }
    throw InfeasibleParametersError("girth " + std::to_string(girth_min) +
                                    " not reached within retry budget");
}

Graph subgraph_induced(const Graph& g, const VertexSet& s) {
    return subgraph_induced_mapped(g, s).graph;
}

MappedSubgraph subgraph_induced_mapped(const Graph& g, const VertexSet& s) {
    MappedSubgraph out;
    out.old_to_new.assign(g.n, -1);
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (v >= g.n) throw OutOfRangeError("induced set vertex out of range");
        out.old_to_new[v] = (int)out.new_to_old.size();
        out.new_to_old.push_back(v);
    }
    out.graph = Graph((int)out.new_to_old.size());
    for (int v = s.first(); v >= 0; v = s.next(v))
        for (int u = (g.adj[v] & s).next(v); u >= 0; u = (g.adj[v] & s).next(u))
            out.graph.add_edge(out.old_to_new[v], out.old_to_new[u]);
    return out;
}

MappedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
    return subgraph_induced_mapped(g, g.vertex_set() - s);
}

ContractionResult contract_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) throw OutOfRangeError("contract endpoint out of range");
    if (!g.has_edge(u, v)) throw NotAnEdgeError("contracting a non-edge");
    int keep = std::min(u, v), drop = std::max(u, v);
    ContractionResult r;
    r.vertex_map.assign(g.n, -1);
    for (int w = 0, next = 0; w < g.n; ++w) {
        if (w == drop) continue;
        r.vertex_map[w] = next++;
    }
    r.vertex_map[drop] = r.vertex_map[keep];
    r.graph = Graph(g.n - 1);
    for (auto [a, b] : g.edges()) {
        int na = r.vertex_map[a], nb = r.vertex_map[b];
        if (na != nb) r.graph.add_edge(na, nb);
    }
    return r;
}

VertexSet component_of(const Graph& g, int v, const VertexSet& within) {
    VertexSet comp(g.n);
    comp.set(v);
    VertexSet frontier = comp;
    while (frontier.any()) {
        VertexSet next(g.n);
        for (int w = frontier.first(); w >= 0; w = frontier.next(w)) next |= g.adj[w];
        next &= within;
        next -= comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet todo = within;
    for (int v = todo.first(); v >= 0; v = todo.first()) {
        VertexSet c = component_of(g, v, within);
        todo -= c;
        out.push_back(c);
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertex_set()); }

bool is_connected_subset(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    return component_of(g, s.first(), s) == s;
}

int girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge at the BFS frontier closes a
    // shortest cycle through the root.
    int best = 0;
    std::vector<int> dist(g.n), par(g.n);
    for (int root = 0; root < g.n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> q{root};
        dist[root] = 0;
        par[root] = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w = g.adj[u].first(); w >= 0; w = g.adj[u].next(w)) {
                if (w == par[u]) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    q.push_back(w);
                } else {
                    int len = dist[u] + dist[w] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

bool is_forest(const Graph& g) { return girth(g) == 0; }

std::optional<std::pair<VertexSet, VertexSet>> bipartite_sides(const Graph& g) {
    VertexSet side0(g.n), side1(g.n), seen(g.n);
    std::vector<int> colour(g.n, -1);
    for (int root = 0; root < g.n; ++root) {
        if (colour[root] >= 0) continue;
        colour[root] = 0;
        std::deque<int> q{root};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w = g.adj[u].first(); w >= 0; w = g.adj[u].next(w)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[u];
                    q.push_back(w);
                } else if (colour[w] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < g.n; ++v) (colour[v] == 0 ? side0 : side1).set(v);
    return std::make_pair(side0, side1);
}

std::vector<int> shortest_path(const Graph& g, int from, int to, const VertexSet& within) {
    if (!within.test(from) || !within.test(to)) return {};
    std::vector<int> par(g.n, -2);
    par[from] = -1;
    std::deque<int> q{from};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (u == to) break;
        for (int w = (g.adj[u] & within).first(); w >= 0; w = (g.adj[u] & within).next(w)) {
            if (par[w] == -2) {
                par[w] = u;
                q.push_back(w);
            }
        }
    }
    if (par[to] == -2) return {};
    std::vector<int> path;
    for (int v = to; v >= 0; v = par[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out(g.n);
    for (int v = s.first(); v >= 0; v = s.next(v)) out |= g.adj[v];
    out -= s;
    return out;
}

}  // namespace minorforge
