#pragma once

#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

// All graphs on exactly n vertices up to isomorphism, by canonical
// augmentation (one vertex at a time, deduplicated on canonical forms).
// Cached per n; supported up to n = 9.
const std::vector<Graph>& all_graphs_of_order(int n);

}  // namespace minorforge
