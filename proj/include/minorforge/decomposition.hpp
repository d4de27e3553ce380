#pragma once

#include <map>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/minor.hpp"

namespace minorforge {

// Bag system covering every edge; C-bounded when all bags have size <= C.
struct Decomposition {
    std::vector<VertexSet> bags;  // over V(h), in construction order
    int C = 0;
};

long long decomposition_excess(const Decomposition& d, const Graph& h);
// Edge coverage plus the size bound.
bool decomposition_valid(const Decomposition& d, const Graph& h, std::string* why = nullptr);

// Balanced-separator recursion: single bag at v(h) <= C, otherwise recurse
// on both sides with the separator replicated. Throws
// NoSeparatorSmallEnoughError when some recursion node has no balanced
// separation (e.g. complete graphs above C).
Decomposition bounded_decomposition(const Graph& h, int C);

// The expansion h -> (h', F): one fresh copy of h[B] per bag, copies of each
// vertex strung into a path by the F-edges.
struct ExpansionResult {
    Graph h_prime;
    std::vector<Edge> f_edges;
    std::vector<int> orig_vertex;             // h'-vertex -> h-vertex it copies
    std::vector<int> bag_of;                  // h'-vertex -> bag index (-1: preserved isolated)
    std::map<int, std::vector<int>> copy_paths;  // h-vertex -> its copies y_1..y_ix
    MinorModel contraction_witness;           // model of h in h' by copy-path contraction
};

ExpansionResult expand_for_component_size(const Graph& h, const Decomposition& d);

}  // namespace minorforge
