#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gallai/coloring.hpp"

namespace gallai {

/// Nontrivial vertex partition whose part pairs are each joined in a single
/// color, with at most two such colors overall.
struct GallaiPartition {
    std::vector<std::vector<Vertex>> parts;
    std::vector<Color> between_colors;           // ascending
    std::vector<std::vector<Color>> pair_colors;  // q x q, symmetric, diagonal unused

    std::size_t part_count() const { return parts.size(); }

    /// Reads pair colors off g (first cross edge of each part pair) and
    /// collects them into between_colors. The result may be invalid; see
    /// verify_partition.
    static GallaiPartition from_parts(const EdgeColoring& g, std::vector<std::vector<Vertex>> parts);

    friend bool operator==(const GallaiPartition&, const GallaiPartition&) = default;
};

enum class PartitionViolation {
    None,
    Trivial,              // fewer than two parts
    CrossEdgeColor,       // a cross edge differs from its part pair's color
    PairColorNotBetween,  // a part pair color missing from between_colors
    TooManyBetweenColors, // more than two colors between parts
};

struct PartitionReport {
    bool valid = true;
    PartitionViolation violation = PartitionViolation::None;
    // First offending edge, when the violation is edge-shaped.
    std::optional<std::pair<Vertex, Vertex>> edge;
    std::string message;
};

/// Throws MalformedPartition unless p.parts is a partition of g's vertex set
/// and pair_colors has the right shape.
PartitionReport verify_partition(const EdgeColoring& g, const GallaiPartition& p);

/// Finds some valid Gallai partition. Throws NotGallai when g has a rainbow
/// triangle, OrderTooSmall below two vertices.
GallaiPartition find_gallai_partition(const EdgeColoring& g);

struct ReducedGraph {
    EdgeColoring coloring;        // one vertex per part, k = |between_colors|
    std::vector<Color> palette;   // reduced color -> original color
};

/// Throws InvalidPartition when verify_partition rejects p.
ReducedGraph reduced_graph(const EdgeColoring& g, const GallaiPartition& p);

}  // namespace gallai
