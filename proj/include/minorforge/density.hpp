#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/minor.hpp"
#include "minorforge/rational.hpp"

namespace minorforge {

struct PruneResult {
    MappedSubgraph sub;       // pruned graph with id maps
    VertexSet removed;        // X, over the input graph
    Rational density_after{0, 1};
};

// Removes every vertex of degree > (1+alpha)*D. Requires delta(g) >= D.
PruneResult prune_high_degree(const Graph& g, int D, const Rational& alpha);

struct Piece {
    VertexSet host_vertices;  // over the graph the outcome refers to
    Graph subgraph;
    Rational density{0, 1};
};

struct IncrementOutcome {
    enum class Tag { Pieces, DenserMinor, Inconclusive };
    Tag tag = Tag::Inconclusive;
    std::vector<Piece> pieces;
    std::optional<Graph> minor_pattern;
    std::optional<MinorModel> minor_model;
    Rational claimed_density{0, 1};  // threshold the DenserMinor asserts
    std::string reason;              // Inconclusive explanation
    int round = -1;                  // round index when raised inside the iteration
};

// One dichotomy step: a small dense connected subgraph, a strictly denser
// minor, or an honest Inconclusive (which also covers a failing d >= 2/eps
// hypothesis). Never fabricates a guarantee.
IncrementOutcome dense_step(const Graph& g, const Rational& eps);

struct RoundInfo {
    int round = 0;
    int v = 0;
    long long e = 0;
    Rational density{0, 1};
    std::string action;  // "prune" | "subgraph" | "minor" | "inconclusive"
    bool bounds_ok = true;
    std::string note;
};

struct ExtractResult {
    IncrementOutcome outcome;
    std::vector<RoundInfo> ledger;
};

// The K-piece iteration: prune to G0, then repeat dense_step with 3*eps,
// removing each found piece. Requires delta(g) >= D.
ExtractResult extract_pieces(const Graph& g, int D, int K, const Rational& eps,
                             const Rational& gamma);

// Subgraph with connectivity at least ceil(d(g)/2): peel small-order
// separations keeping the denser side, verify exactly, exhaustively search
// induced subgraphs as a fallback on small instances.
MappedSubgraph mader_subgraph(const Graph& g);

}  // namespace minorforge
