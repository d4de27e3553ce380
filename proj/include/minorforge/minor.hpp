#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

// Certificate of H being a minor of G: one non-empty branch set per
// H-vertex, pairwise disjoint, each inducing a connected subgraph, with a
// host edge realizing every H-edge.
struct MinorModel {
    Graph pattern;
    Graph host;
    std::vector<VertexSet> branch_sets;  // indexed by pattern vertex
};

struct VerifyResult {
    bool ok = true;
    std::string reason;  // first violated condition
    int a = -1, b = -1;  // offending vertex/edge
    explicit operator bool() const { return ok; }
};

// Checks the three model conditions; on failure reports the first violation.
// Throws std::invalid_argument when branch_sets does not match V(pattern).
VerifyResult verify_model(const MinorModel& m);

// Host edges lying inside branch sets or realizing pattern edges; every
// valid model uses at least e(pattern) of them.
long long model_host_edge_count(const MinorModel& m);

// Partial injective root map: pattern vertex -> prescribed host vertex that
// its branch set must contain. May cover any subset of V(pattern).
struct RootedSpec {
    std::map<int, int> roots;
};

// Exact branch-and-bound minor test. Returns a verified model or nullopt;
// throws BudgetExceededError when v(g) exceeds `cap` (default from config).
std::optional<MinorModel> test_minor(const Graph& h, const Graph& g, int cap = -1);

// Independent oracle: recursion on one-edge contractions / one-vertex
// deletions with subgraph-isomorphism at the base, memoized on canonical
// forms. Exact.
bool test_minor_oracle2(const Graph& h, const Graph& g, int cap = -1);

std::optional<MinorModel> find_rooted_model(const Graph& h, const Graph& g, const RootedSpec& spec,
                                            int cap = -1);

// Injective homomorphism h -> g avoiding `forbidden`, extending `pinned`.
std::optional<std::vector<int>> find_subgraph_iso(const Graph& h, const Graph& g,
                                                  const VertexSet& forbidden,
                                                  const std::map<int, int>& pinned);
std::optional<std::vector<int>> find_subgraph_iso(const Graph& h, const Graph& g);

// Model extension along connecting paths: given a model of H-F and internally disjoint
// paths realizing the F-edges, absorbs each path into an endpoint branch set
// and returns a verified model of H. Throws PathViolationError.
MinorModel extend_model_with_paths(const MinorModel& m, const Graph& h_full,
                                   const std::vector<Edge>& f_edges,
                                   const std::vector<std::vector<int>>& paths);

}  // namespace minorforge
