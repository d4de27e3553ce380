#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace minorforge {

// Fixed-capacity bitset over vertex ids 0..n-1. Membership is O(1) and
// iteration order is ascending, which every deterministic tie-break in the
// search code relies on.
class VertexSet {
public:
    static constexpr int kWords = 3;
    static constexpr int kMaxBits = 64 * kWords;

    VertexSet() = default;
    explicit VertexSet(int nbits) : nbits_(nbits) {}

    int capacity() const { return nbits_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void clear() { w_ = {0, 0, 0}; }

    void set_all() {
        clear();
        for (int i = 0; i < nbits_; ++i) set(i);
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const { return !(w_[0] | w_[1] | w_[2]); }
    bool any() const { return !empty(); }

    // First set bit, or -1.
    int first() const { return next(-1); }
    // Smallest set bit > i, or -1.
    int next(int i) const {
        ++i;
        if (i >= kMaxBits) return -1;
        int word = i >> 6;
        uint64_t w = w_[word] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return word * 64 + __builtin_ctzll(w);
            if (++word >= kWords) return -1;
            w = w_[word];
        }
    }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet r(nbits_);
        for (int k = 0; k < kWords; ++k) r.w_[k] = w_[k] & o.w_[k];
        return r;
    }
    VertexSet operator|(const VertexSet& o) const {
        VertexSet r(nbits_);
        for (int k = 0; k < kWords; ++k) r.w_[k] = w_[k] | o.w_[k];
        return r;
    }
    // Set difference.
    VertexSet operator-(const VertexSet& o) const {
        VertexSet r(nbits_);
        for (int k = 0; k < kWords; ++k) r.w_[k] = w_[k] & ~o.w_[k];
        return r;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int k = 0; k < kWords; ++k) w_[k] &= o.w_[k];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int k = 0; k < kWords; ++k) w_[k] |= o.w_[k];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int k = 0; k < kWords; ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    bool operator==(const VertexSet& o) const { return w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return w_ != o.w_; }

    bool intersects(const VertexSet& o) const {
        for (int k = 0; k < kWords; ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (int k = 0; k < kWords; ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    // Lexicographic order on the ascending vertex sequences, used for
    // deterministic tie-breaking. {0,2} < {1}, {0} < {0,1}.
    bool lex_less(const VertexSet& o) const {
        int a = first(), b = o.first();
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b;
            a = next(a);
            b = o.next(b);
        }
        return a < 0 && b >= 0;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    static VertexSet of(int nbits, const std::vector<int>& vs) {
        VertexSet s(nbits);
        for (int v : vs) s.set(v);
        return s;
    }

    static VertexSet full(int nbits) {
        VertexSet s(nbits);
        s.set_all();
        return s;
    }

    std::string to_string() const {
        std::string out = "{";
        for (int v = first(); v >= 0; v = next(v)) {
            if (out.size() > 1) out += ",";
            out += std::to_string(v);
        }
        return out + "}";
    }

private:
    std::array<uint64_t, kWords> w_ = {0, 0, 0};
    int nbits_ = 0;
};

}  // namespace minorforge
