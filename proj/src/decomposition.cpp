#include "minorforge/decomposition.hpp"

#include <algorithm>

#include "minorforge/errors.hpp"
#include "minorforge/separation.hpp"

namespace minorforge {

long long decomposition_excess(const Decomposition& d, const Graph& h) {
    long long total = 0;
    for (const auto& b : d.bags) total += b.count();
    return total - h.n;
}

bool decomposition_valid(const Decomposition& d, const Graph& h, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    for (const auto& b : d.bags) {
        if (!b.is_subset_of(h.vertex_set())) return fail("bag contains a non-vertex");
        if (d.C > 0 && b.count() > d.C) return fail("bag exceeds the bound");
    }
    for (auto [u, v] : h.edges()) {
        bool covered = false;
        for (const auto& b : d.bags)
            if (b.test(u) && b.test(v)) {
                covered = true;
                break;
            }
        if (!covered)
            return fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") uncovered");
    }
    return true;
}

namespace {

void decompose_rec(const Graph& h, const VertexSet& s, int C, std::vector<VertexSet>& bags) {
    if (s.count() <= C) {
        bags.push_back(s);
        return;
    }
    MappedSubgraph sub = subgraph_induced_mapped(h, s);
    auto sep = balanced_separator(sub.graph);
    if (!sep)
        throw NoSeparatorSmallEnoughError("no balanced separation on a part of " +
                                          std::to_string(sub.graph.n) + " vertices");
    VertexSet a(h.n), b(h.n);
    for (int v = sep->A.first(); v >= 0; v = sep->A.next(v)) a.set(sub.new_to_old[v]);
    for (int v = sep->B.first(); v >= 0; v = sep->B.next(v)) b.set(sub.new_to_old[v]);
    decompose_rec(h, a, C, bags);
    decompose_rec(h, b, C, bags);
}

}  // namespace

Decomposition bounded_decomposition(const Graph& h, int C) {
    if (C < 2) throw PreconditionError("bound C must be at least 2");
    Decomposition d;
    d.C = C;
    if (h.n > 0) decompose_rec(h, h.vertex_set(), C, d.bags);
    std::string why;
    if (!decomposition_valid(d, h, &why)) throw std::logic_error("decomposition invalid: " + why);
    return d;
}

ExpansionResult expand_for_component_size(const Graph& h, const Decomposition& d) {
    std::string why;
    if (!decomposition_valid(d, h, &why)) throw InvalidDecompositionError(why);
    // Vertices outside every bag must be isolated; they are carried over
    // unchanged, mirroring the construction's handling of isolated vertices.
    VertexSet covered(h.n);
    for (const auto& b : d.bags) covered |= b;
    for (int v = (h.vertex_set() - covered).first(); v >= 0;
         v = (h.vertex_set() - covered).next(v))
        if (h.degree(v) > 0) throw InvalidDecompositionError("non-isolated vertex in no bag");

    ExpansionResult out;
    int total = 0;
    for (const auto& b : d.bags) total += b.count();
    total += h.n - covered.count();
    if (total > VertexSet::kMaxBits) throw BudgetExceededError("expansion exceeds vertex capacity");

    out.h_prime = Graph(total);
    out.orig_vertex.assign(total, -1);
    out.bag_of.assign(total, -1);
    int next_id = 0;
    for (size_t bi = 0; bi < d.bags.size(); ++bi) {
        std::vector<int> local(h.n, -1);
        for (int v = d.bags[bi].first(); v >= 0; v = d.bags[bi].next(v)) {
            local[v] = next_id;
            out.orig_vertex[next_id] = v;
            out.bag_of[next_id] = (int)bi;
            out.copy_paths[v].push_back(next_id);
            ++next_id;
        }
        for (auto [u, v] : h.edges())
            if (local[u] >= 0 && local[v] >= 0) out.h_prime.add_edge(local[u], local[v]);
    }
    for (int v = (h.vertex_set() - covered).first(); v >= 0;
         v = (h.vertex_set() - covered).next(v)) {
        out.orig_vertex[next_id] = v;
        out.copy_paths[v].push_back(next_id);
        ++next_id;
    }
    // F: consecutive copies of each vertex, in bag order.
    for (int v = 0; v < h.n; ++v) {
        const auto& path = out.copy_paths[v];
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            out.h_prime.add_edge(path[i], path[i + 1]);
            out.f_edges.emplace_back(path[i], path[i + 1]);
        }
    }

    out.contraction_witness.pattern = h;
    out.contraction_witness.host = out.h_prime;
    out.contraction_witness.branch_sets.assign(h.n, VertexSet(total));
    for (int v = 0; v < h.n; ++v)
        for (int c : out.copy_paths[v]) out.contraction_witness.branch_sets[v].set(c);

    VerifyResult vr = verify_model(out.contraction_witness);
    if (!vr) throw std::logic_error("expansion witness invalid: " + vr.reason);
    if ((long long)out.f_edges.size() != (long long)out.h_prime.n - h.n)
        throw std::logic_error("expansion bookkeeping: |F| != v(h') - v(h)");
    GraphStats sh = stats(h);
    GraphStats sp = stats(out.h_prime);
    if (sp.max_degree > sh.max_degree + 2)
        throw std::logic_error("expansion raised maximum degree by more than 2");
    // No F-edge inside one component of h'-F: F-edges join different bags.
    for (auto [a, b] : out.f_edges)
        if (out.bag_of[a] == out.bag_of[b] && out.bag_of[a] != -1)
            throw std::logic_error("F-edge inside one bag copy");
    return out;
}

}  // namespace minorforge
