#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "minorforge/rational.hpp"
#include "minorforge/vertex_set.hpp"

namespace minorforge {

using Edge = std::pair<int, int>;

// Undirected simple graph over dense integer vertex ids 0..n-1. Values are
// immutable after construction; every operation below is a pure function.
struct Graph {
    int n = 0;
    long long m = 0;  // edge count
    std::vector<VertexSet> adj;
    std::string label;

    Graph() = default;
    explicit Graph(int n_, std::string label_ = "") : n(n_), label(std::move(label_)) {
        adj.assign(n, VertexSet(n));
    }

    bool has_edge(int u, int v) const { return adj[u].test(v); }
    void add_edge(int u, int v) {
        if (u == v || adj[u].test(v)) return;
        adj[u].set(v);
        adj[v].set(u);
        ++m;
    }
    int degree(int v) const { return adj[v].count(); }
    const VertexSet& neighbors(int v) const { return adj[v]; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m);
        for (int u = 0; u < n; ++u)
            for (int v = adj[u].next(u); v >= 0; v = adj[u].next(v)) out.emplace_back(u, v);
        return out;
    }

    VertexSet vertex_set() const { return VertexSet::full(n); }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

struct GraphStats {
    int v = 0;
    long long e = 0;
    int min_degree = 0;
    int max_degree = 0;
    std::optional<Rational> density;  // absent for the null graph
    int degeneracy = 0;
    bool is_bipartite = true;
    int max_component_size = 0;
};

// Throws OutOfRangeError / SelfLoopError; duplicate edges are deduplicated.
Graph build_graph(int n, const std::vector<Edge>& edges, std::string label = "");

GraphStats stats(const Graph& g);

// --- generators ---
Graph null_graph();
Graph edgeless(int n);
Graph complete(int t);
Graph complete_bipartite(int s, int t);
Graph complete_multipartite(const std::vector<int>& parts);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph petersen();
Graph disjoint_union(const std::vector<Graph>& parts);
Graph complement(const Graph& g);
Graph random_gnp(int n, double p, std::mt19937_64& rng);
// d-regular with girth strictly greater than `girth_min`; seeded rejection
// sampling, throws InfeasibleParametersError after the retry budget.
Graph regular_high_girth(int d, int girth_min, int n, uint64_t seed);

// --- surgery ---
Graph subgraph_induced(const Graph& g, const VertexSet& s);

struct MappedSubgraph {
    Graph graph;
    std::vector<int> new_to_old;
    std::vector<int> old_to_new;  // -1 for removed vertices
};
MappedSubgraph subgraph_induced_mapped(const Graph& g, const VertexSet& s);
MappedSubgraph delete_vertices(const Graph& g, const VertexSet& s);

struct ContractionResult {
    Graph graph;
    std::vector<int> vertex_map;  // old id -> new id; both endpoints map to the merged vertex
};
// Requires uv in E(g); merges v into u, removes loops/parallels, relabels to
// keep ids dense.
ContractionResult contract_edge(const Graph& g, int u, int v);

// --- traversal helpers ---
VertexSet component_of(const Graph& g, int v, const VertexSet& within);
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> components(const Graph& g);
bool is_connected_subset(const Graph& g, const VertexSet& s);
// Length of the shortest cycle; 0 if acyclic.
int girth(const Graph& g);
bool is_forest(const Graph& g);
// Two-colouring per component; side 0 contains the least vertex of each
// component. Empty optional if not bipartite.
std::optional<std::pair<VertexSet, VertexSet>> bipartite_sides(const Graph& g);
// Shortest u-v path inside `within` (inclusive of endpoints), empty if none.
std::vector<int> shortest_path(const Graph& g, int from, int to, const VertexSet& within);

// Union of neighborhoods of s, minus s itself.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

}  // namespace minorforge
