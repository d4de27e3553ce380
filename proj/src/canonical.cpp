#include "minorforge/canonical.hpp"

#include <algorithm>
#include <map>

namespace minorforge {

namespace {

using Partition = std::vector<std::vector<int>>;

// Equitable refinement: split cells by neighbor counts into every cell until
// stable. Cell order (and therefore the eventual vertex order) is
// deterministic: splits are ordered by their count signatures.
Partition refine(const Graph& g, Partition p) {
    bool changed = true;
    while (changed) {
        changed = false;
        Partition next;
        next.reserve(p.size());
        for (const auto& cell : p) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> buckets;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(p.size());
                for (const auto& other : p) {
                    int c = 0;
                    for (int u : other) c += g.has_edge(v, u) ? 1 : 0;
                    sig.push_back(c);
                }
                buckets[sig].push_back(v);
            }
            if (buckets.size() > 1) changed = true;
            for (auto& [sig, vs] : buckets) next.push_back(vs);
        }
        p = std::move(next);
    }
    return p;
}

struct CanonSearch {
    const Graph& g;
    std::vector<char> best_bits;
    std::vector<int> best_order;
    bool have_best = false;

    explicit CanonSearch(const Graph& g_) : g(g_) {}

    static std::vector<char> bits_for(const Graph& g, const std::vector<int>& order, int upto) {
        std::vector<char> bits;
        bits.reserve(size_t(upto) * (upto - 1) / 2);
        for (int j = 1; j < upto; ++j)
            for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(order[i], order[j]) ? 1 : 0);
        return bits;
    }

    void consider(const std::vector<int>& order) {
        std::vector<char> bits = bits_for(g, order, g.n);
        if (!have_best || bits < best_bits) {
            best_bits = std::move(bits);
            best_order = order;
            have_best = true;
        }
    }

    void search(const Partition& p) {
        // Prefix of positions fixed by leading singleton cells.
        std::vector<int> prefix;
        size_t ci = 0;
        while (ci < p.size() && p[ci].size() == 1) prefix.push_back(p[ci++][0]);
        if (ci == p.size()) {
            consider(prefix);
            return;
        }
        if (have_best && !prefix.empty()) {
            std::vector<char> pb = bits_for(g, prefix, (int)prefix.size());
            std::vector<char> bb(best_bits.begin(), best_bits.begin() + pb.size());
            if (pb > bb) return;
        }
        const std::vector<int> cell = p[ci];
        for (int v : cell) {
            Partition q;
            q.reserve(p.size() + 1);
            for (size_t k = 0; k < ci; ++k) q.push_back(p[k]);
            q.push_back({v});
            std::vector<int> rest;
            for (int u : cell)
                if (u != v) rest.push_back(u);
            q.push_back(rest);
            for (size_t k = ci + 1; k < p.size(); ++k) q.push_back(p[k]);
            search(refine(g, q));
        }
    }
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) {
    std::vector<int> identity(g.n);
    for (int v = 0; v < g.n; ++v) identity[v] = v;
    if (g.n <= 1 || g.m == 0 || g.m == (long long)g.n * (g.n - 1) / 2) return identity;

    Partition start = {identity};
    CanonSearch cs(g);
    cs.search(refine(g, start));
    return cs.best_order;
}

std::string canonical_form(const Graph& g) {
    std::vector<int> order = canonical_order(g);
    std::string key;
    key.push_back(char(g.n & 0xff));
    key.push_back(char((g.n >> 8) & 0xff));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0);
            if (++nbits == 8) {
                key.push_back(char(acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) key.push_back(char(acc << (8 - nbits)));
    return key;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.m != b.m) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace minorforge
