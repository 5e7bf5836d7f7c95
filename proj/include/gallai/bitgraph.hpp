#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gallai {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

/// Dynamic vertex set backed by 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_(words_for(n), 0) {}

    static VertexSet full(std::size_t n);

    std::size_t capacity() const { return n_; }
    bool test(Vertex v) const { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
    void set(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void reset(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
    std::size_t count() const;
    bool empty() const;

    std::span<Word> words() { return words_; }
    std::span<const Word> words() const { return words_; }

    std::vector<Vertex> members() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Word> words_;
};

/// Simple loopless undirected graph with one bitset row per vertex.
class BitGraph {
public:
    BitGraph() = default;
    explicit BitGraph(std::size_t n) : n_(n), words_(words_for(n)), rows_(n * words_, 0) {}

    std::size_t order() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool has_edge(Vertex u, Vertex v) const {
        return (rows_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
    }
    void add_edge(Vertex u, Vertex v) {
        rows_[u * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
        rows_[v * words_ + u / kWordBits] |= Word{1} << (u % kWordBits);
    }
    void remove_edge(Vertex u, Vertex v) {
        rows_[u * words_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
        rows_[v * words_ + u / kWordBits] &= ~(Word{1} << (u % kWordBits));
    }

    std::span<const Word> row(Vertex v) const { return {rows_.data() + v * words_, words_}; }

    std::size_t degree(Vertex v) const;
    std::size_t edge_count() const;
    std::size_t max_degree() const;
    VertexSet neighbours(Vertex v) const;

    friend bool operator==(const BitGraph&, const BitGraph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> rows_;
};

// Word-span helpers shared by the backtracking searches.
inline std::size_t popcount(std::span<const Word> s) {
    std::size_t c = 0;
    for (Word w : s) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

inline bool any(std::span<const Word> s) {
    for (Word w : s)
        if (w) return true;
    return false;
}

/// Calls f(v) for each set bit in ascending order; stops early when f returns true.
template <typename F>
bool for_each_bit(std::span<const Word> s, F&& f) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        Word w = s[i];
        while (w) {
            const auto b = static_cast<std::size_t>(std::countr_zero(w));
            w &= w - 1;
            if (f(static_cast<Vertex>(i * kWordBits + b))) return true;
        }
    }
    return false;
}

}  // namespace gallai
