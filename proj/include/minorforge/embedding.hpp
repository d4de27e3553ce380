#pragma once

#include <optional>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

struct Bipartition {
    VertexSet A, B;  // |A| <= |B|, every edge crosses
};

// Over all per-component sign choices, the bipartition minimizing |B|
// subject to |A| <= |B|; deterministic tie-break. Throws NotBipartiteError.
Bipartition min_B_bipartition(const Graph& h);

// Exact maximum matching (augmenting paths) on a bipartite adjacency list;
// returns match_l: left index -> right index or -1.
std::vector<int> max_bipartite_matching(int n_left, int n_right,
                                        const std::vector<std::vector<int>>& adj);

// Hall-based embedding of a bounded-degree bipartite h into a host whose
// degrees are large outside the exceptional set X. Returns an injective
// homomorphism phi: V(h) -> V(g). Throws PreconditionError naming the failed
// inequality; HallFailureError is a bug sentinel.
std::vector<int> hall_embed(const Graph& h, int max_degree, const Graph& g, const VertexSet& x);

// Greedy tree-by-tree embedding of a forest, avoiding `forbidden`. Throws
// StuckNoUnusedNeighbourError when the greedy runs out of fresh neighbours.
std::vector<int> greedy_forest_embed(const Graph& f, const Graph& g, const VertexSet& forbidden);

struct PackResult {
    VertexSet used_host;                 // V(G0), over V(g)
    Graph g0;                            // induced host subgraph
    std::vector<int> g0_new_to_old;
    VertexSet packed_vertices;           // over V(h)
    Graph h0;                            // h induced on the packed components
    std::vector<int> h0_new_to_old;
    std::vector<int> packed_components;  // indices into components(h)
    std::vector<int> phi;                // h-vertex -> g-vertex, -1 when unpacked
};

// Greedy maximal packing of components of h into g under a total size cap.
PackResult pack_components(const Graph& h, const Graph& g, int size_cap);

}  // namespace minorforge
