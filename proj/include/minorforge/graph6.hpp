#pragma once

#include <string>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

// graph6 text encoding: 6 bits per character, offset 63, upper-triangle
// adjacency in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph from_graph6(const std::string& line);
// One graph per non-empty line.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace minorforge
