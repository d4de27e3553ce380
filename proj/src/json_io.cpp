#include "minorforge/json_io.hpp"

namespace minorforge {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    json j;
    j["n"] = g.n;
    j["edges"] = edges;
    j["label"] = g.label;
    return j;
}

Graph graph_from_json(const json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return build_graph(j.at("n").get<int>(), edges, j.value("label", ""));
}

json vertex_set_to_json(const VertexSet& s) {
    json out = json::array();
    for (int v = s.first(); v >= 0; v = s.next(v)) out.push_back(v);
    return out;
}

VertexSet vertex_set_from_json(const json& j, int nbits) {
    VertexSet s(nbits);
    for (const auto& v : j) s.set(v.get<int>());
    return s;
}

json model_to_json(const MinorModel& m) {
    json branch;
    for (int v = 0; v < m.pattern.n; ++v)
        branch[std::to_string(v)] = vertex_set_to_json(m.branch_sets[v]);
    json j;
    j["pattern"] = graph_to_json(m.pattern);
    j["host"] = graph_to_json(m.host);
    j["branch_sets"] = branch;
    return j;
}

MinorModel model_from_json(const json& j) {
    MinorModel m;
    m.pattern = graph_from_json(j.at("pattern"));
    m.host = graph_from_json(j.at("host"));
    m.branch_sets.assign(m.pattern.n, VertexSet(m.host.n));
    for (const auto& [key, val] : j.at("branch_sets").items())
        m.branch_sets.at(std::stoi(key)) = vertex_set_from_json(val, m.host.n);
    return m;
}

json separation_to_json(const Separation& s) {
    json j;
    j["A"] = vertex_set_to_json(s.A);
    j["B"] = vertex_set_to_json(s.B);
    j["order"] = s.order();
    return j;
}

}  // namespace minorforge
