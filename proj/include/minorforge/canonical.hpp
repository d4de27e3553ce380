#pragma once

#include <string>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

// Canonical labelling for small graphs by iterated degree refinement with
// exhaustive tie-break (individualize-and-refine, minimizing the packed
// adjacency string). Intended for graphs of at most ~12 vertices.
std::vector<int> canonical_order(const Graph& g);

// Canonical key: equal strings iff isomorphic graphs.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace minorforge
