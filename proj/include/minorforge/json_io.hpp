#pragma once

#include <json.hpp>

#include "minorforge/graph.hpp"
#include "minorforge/minor.hpp"
#include "minorforge/separation.hpp"

namespace minorforge {

// Fixture schemas. nlohmann::json keeps object keys sorted, so dumps are
// byte-stable across runs.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const MinorModel& m);
MinorModel model_from_json(const nlohmann::json& j);

nlohmann::json separation_to_json(const Separation& s);

nlohmann::json vertex_set_to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const nlohmann::json& j, int nbits);

}  // namespace minorforge
