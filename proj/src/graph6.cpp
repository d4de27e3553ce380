#include "minorforge/graph6.hpp"

#include <fstream>

#include "minorforge/errors.hpp"

namespace minorforge {

namespace {
constexpr int kBias = 63;

void append_bits(std::string& out, int& acc, int& nbits, int bit) {
    acc = (acc << 1) | bit;
    if (++nbits == 6) {
        out.push_back(char(acc + kBias));
        acc = 0;
        nbits = 0;
    }
}
}  // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(char(g.n + kBias));
    } else if (g.n <= 258047) {
        out.push_back(126);
        out.push_back(char(((g.n >> 12) & 63) + kBias));
        out.push_back(char(((g.n >> 6) & 63) + kBias));
        out.push_back(char((g.n & 63) + kBias));
    } else {
        throw OutOfRangeError("graph too large for this graph6 writer");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) append_bits(out, acc, nbits, g.has_edge(i, j) ? 1 : 0);
    if (nbits > 0) {
        acc <<= (6 - nbits);
        out.push_back(char(acc + kBias));
    }
    return out;
}

Graph from_graph6(const std::string& line) {
    std::string s = line;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw OutOfRangeError("empty graph6 string");

    size_t pos = 0;
    auto next6 = [&]() -> int {
        if (pos >= s.size()) throw OutOfRangeError("truncated graph6 string");
        int c = (unsigned char)s[pos++];
        if (c < kBias || c > 126) throw OutOfRangeError("invalid graph6 character");
        return c - kBias;
    };

    long long n;
    if ((unsigned char)s[0] != 126) {
        n = next6();
    } else {
        ++pos;
        if (pos < s.size() && (unsigned char)s[pos] == 126)
            throw OutOfRangeError("graph6 8-byte sizes unsupported");
        long long a = next6(), b = next6(), c = next6();
        n = (a << 12) | (b << 6) | c;
    }
    if (n > VertexSet::kMaxBits)
        throw OutOfRangeError("graph6 order exceeds supported maximum of " +
                              std::to_string(VertexSet::kMaxBits));

    Graph g((int)n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next6();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    }
    return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = line;
        while (!t.empty() && (t.back() == '\r' || t.back() == ' ')) t.pop_back();
        if (!t.empty()) out.push_back(from_graph6(t));
    }
    return out;
}

}  // namespace minorforge
