#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "minorforge/graph.hpp"
#include "minorforge/minor.hpp"
#include "minorforge/rational.hpp"
#include "minorforge/separation.hpp"

namespace minorforge {

// One simple edge extension: a new vertex joined to at most one existing
// vertex, or a fresh edge on two new vertices.
struct ExtensionStep {
    enum class Kind { AttachNew, NewEdgePair } kind = Kind::AttachNew;
    int to = -1;  // AttachNew target (base or earlier new vertex), -1 for none
};

struct EdgeExtension {
    Graph base;
    std::vector<ExtensionStep> steps;
};

// The extension graph: base vertices keep their ids, new vertices appended
// in step order.
Graph apply_extension(const EdgeExtension& ext);
// New vertices (A) and base vertices that received new edges (B).
VertexSet extension_new_vertices(const EdgeExtension& ext);
VertexSet extension_attachment_points(const EdgeExtension& ext);

// All graphs obtainable by at most k simple edge extensions, up to
// isomorphism, h itself included. Base vertex ids are preserved in every
// emitted graph. Throws BudgetExceededError past `cap` results.
std::vector<Graph> enumerate_k_extensions(const Graph& h, int k, int cap = 100000);

struct LinkedCheck {
    bool linked = true;
    std::vector<int> failing_injection;  // h-vertex -> g-vertex witness when not linked
    explicit operator bool() const { return linked; }
};

// Exhaustive: a rooted model must exist for every injection V(h) -> V(g).
LinkedCheck is_H_linked(const Graph& g, const Graph& h, int cap = -1);

// Advisory inequality kappa(g) >= C * bound, with the bound defaulting to
// the extremal-function lower bound v(h)/2 - 1.
bool check_corollary_bound(const Graph& g, const Graph& h, int C,
                           std::optional<Rational> bound = std::nullopt);

struct PieceAssemblySpec {
    Graph h;
    std::vector<Edge> f_edges;
    std::vector<std::vector<int>> pieces;  // groups of h-vertices, unions of components of h-F
    std::vector<std::vector<int>> hosts;   // pairwise disjoint vertex groups of G
    bool best_effort = false;              // skip the exhaustive linkage precondition
};

struct DensityPreconditionFailed : std::runtime_error {
    Separation witness;
    DensityPreconditionFailed(std::string msg, Separation w)
        : std::runtime_error(std::move(msg)), witness(std::move(w)) {}
};

struct AssemblyOutcome {
    std::optional<MinorModel> model;
    std::string note;       // honest failure reason when model is absent
    nlohmann::json trace;   // U, W, paths, index sequences, extensions, models
};

// The minor-from-pieces assembler: Menger paths between deterministic
// terminals, per-host edge extensions with rooted models, and final path
// routing through the reserved branch sets. Sound by construction (the
// returned model is verified); incompleteness is reported via `note`.
AssemblyOutcome assemble_minor_from_pieces(const PieceAssemblySpec& spec, const Graph& g);

// Same, but each host is first shrunk to a high-connectivity subgraph and
// the density precondition is re-checked against the shrunken hosts.
AssemblyOutcome assemble_via_dense_cores(const PieceAssemblySpec& spec, const Graph& g);

// Embeds an edge extension of h: greedy forest embedding of the new part,
// then a rooted model of h avoiding it, then singleton branch sets.
std::optional<MinorModel> extension_extremal_embed(const EdgeExtension& ext, const Graph& g);

}  // namespace minorforge
