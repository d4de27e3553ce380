#include "minorforge/enumeration.hpp"

#include <map>
#include <unordered_set>

#include "minorforge/canonical.hpp"
#include "minorforge/errors.hpp"

namespace minorforge {

const std::vector<Graph>& all_graphs_of_order(int n) {
    if (n < 0 || n > 9) throw BudgetExceededError("built-in enumerator supports up to 9 vertices");
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 0) return cache.emplace(0, std::vector<Graph>{null_graph()}).first->second;

    const std::vector<Graph>& prev = all_graphs_of_order(n - 1);
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    for (const Graph& base : prev) {
        for (uint64_t nb = 0; nb < (uint64_t{1} << (n - 1)); ++nb) {
            Graph g(n);
            for (auto [u, v] : base.edges()) g.add_edge(u, v);
            for (int v = 0; v < n - 1; ++v)
                if ((nb >> v) & 1) g.add_edge(v, n - 1);
            if (seen.insert(canonical_form(g)).second) out.push_back(g);
        }
    }
    return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace minorforge
