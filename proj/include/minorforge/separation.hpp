#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

// Separation (A,B): A and B cover V(G), neither side contains the other, and
// no edge joins A\B to B\A. Order is |A∩B|.
struct Separation {
    VertexSet A, B;
    int order() const { return (A & B).count(); }
};

// Checks covering, properness and the no-crossing-edge condition.
bool separation_valid(const Graph& g, const Separation& s, std::string* why = nullptr);

struct DensePairCheck {
    bool ok = true;
    int low_degree_vertex = -1;
    std::optional<Separation> violation;
    explicit operator bool() const { return ok; }
};

// Exact check that (g, X) is (d, k)-dense: all degrees outside X at least d,
// and every separation of order <= k has one side inside X. Throws
// XNotProperError when X is not a proper subset of V(g).
DensePairCheck is_dense_pair(const Graph& g, const VertexSet& x, int d, int k);

struct ExtractedDensePair {
    MappedSubgraph sub;  // G' with id maps back to g
    VertexSet x;         // over V(G'), |x| <= 2k
};

// Constructive extraction: repeatedly takes a separation of order < 2k with
// A minimal (smallest |A|, ties lexicographic) and restricts to (G[A], A∩B)
// until (G', X) is (delta(g), k)-dense.
ExtractedDensePair extract_dense_pair(const Graph& g, int k);

// Smallest-|A| separation of order < max_order_exclusive, ties broken by
// lexicographically least A. nullopt if none exists.
std::optional<Separation> find_min_A_separation(const Graph& g, int max_order_exclusive);
// Any separation of minimum order, or nullopt for complete graphs.
std::optional<Separation> find_min_order_separation(const Graph& g, int max_order_exclusive);

// Exact vertex connectivity; n-1 for complete graphs.
int connectivity(const Graph& g);

// Maximum number of fully vertex-disjoint U-W paths (Menger value).
int min_vertex_cut_between(const Graph& g, const VertexSet& u, const VertexSet& w);

struct MengerResult {
    // Exactly one of the two alternatives is populated.
    std::vector<std::vector<int>> paths;  // l pairwise vertex-disjoint U-W paths
    std::optional<Separation> separation;  // order <= l-1 with U ⊆ A, W ⊆ B
};

// Classic set version: the paths are fully vertex-disjoint (terminals
// included). The returned cut pair covers V with no crossing edges but can
// have an empty side when the cut swallows U or W, e.g. singleton terminals.
MengerResult menger_paths(const Graph& g, const VertexSet& u, const VertexSet& w, int l);

// Covering, no crossing edges, U ⊆ A, W ⊆ B; properness not required.
bool menger_pair_valid(const Graph& g, const Separation& s, const VertexSet& u,
                       const VertexSet& w);

// Minimum-order balanced separation (both sides at most ceil(2v/3)), or
// nullopt when none exists (e.g. complete graphs).
std::optional<Separation> balanced_separator(const Graph& g);

}  // namespace minorforge
