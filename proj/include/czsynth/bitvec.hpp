#pragma once

#include <cstdint>
#include <bit>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace czsynth {

/// Fixed-width bit vector packed into 64-bit words. Used for adjacency rows
/// and vertex sets; all GF(2) row arithmetic is word-wise XOR.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        return (words_[i / 64] >> (i % 64)) & 1u;
    }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    void set(std::size_t i, bool v) { v ? set(i) : reset(i); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    /// Index of the lowest set bit, or size() if none.
    std::size_t find_first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return nbits_;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                f(w * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    bool operator==(const BitVec& o) const = default;

    /// Lexicographic order on the packed words (low bits first).
    bool lex_less(const BitVec& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] != o.words_[w]) return words_[w] < o.words_[w];
        return false;
    }

    std::size_t hash() const {
        std::size_t h = nbits_;
        for (auto w : words_) h = h * 0x9e3779b97f4a7c15ull + w;
        return h;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A subset of the vertices of some host graph.
using VertexSet = BitVec;

inline VertexSet make_vertex_set(std::size_t n, std::initializer_list<std::size_t> vs) {
    VertexSet s(n);
    for (auto v : vs) {
        if (v >= n) throw std::out_of_range("vertex index out of range");
        s.set(v);
    }
    return s;
}

} // namespace czsynth
