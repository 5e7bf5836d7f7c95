#include "gallai/bitgraph.hpp"

#include <algorithm>

namespace gallai {

VertexSet VertexSet::full(std::size_t n) {
    VertexSet s(n);
    for (std::size_t i = 0; i < n / kWordBits; ++i) s.words_[i] = ~Word{0};
    if (n % kWordBits) s.words_[n / kWordBits] = (Word{1} << (n % kWordBits)) - 1;
    return s;
}

std::size_t VertexSet::count() const { return popcount(words_); }

bool VertexSet::empty() const { return !any(words_); }

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for_each_bit(words(), [&](Vertex v) {
        out.push_back(v);
        return false;
    });
    return out;
}

std::size_t BitGraph::degree(Vertex v) const { return popcount(row(v)); }

std::size_t BitGraph::edge_count() const { return popcount(rows_) / 2; }

std::size_t BitGraph::max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

VertexSet BitGraph::neighbours(Vertex v) const {
    VertexSet s(n_);
    std::copy(row(v).begin(), row(v).end(), s.words().begin());
    return s;
}

}  // namespace gallai
