#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/bitgraph.hpp"
#include "gallai/coloring.hpp"

namespace gallai {

enum class ShapeKind { Wheel, Cycle, Path, Matching, Clique };

/// Target subgraph. `size` is the vertex count, except for Matching where it
/// counts edges. Wheel(m) is a hub joined to a rim cycle on m - 1 vertices.
struct PatternShape {
    ShapeKind kind = ShapeKind::Clique;
    std::size_t size = 1;

    static PatternShape wheel(std::size_t m);
    static PatternShape cycle(std::size_t m);
    static PatternShape path(std::size_t m);
    static PatternShape matching(std::size_t edges);
    static PatternShape clique(std::size_t m);

    /// Number of vertices a copy occupies.
    std::size_t order() const { return kind == ShapeKind::Matching ? 2 * size : size; }

    friend bool operator==(const PatternShape&, const PatternShape&) = default;
    friend auto operator<=>(const PatternShape&, const PatternShape&) = default;
};

enum class ScopeKind { InColor, AnyColor, RainbowTriangle };

struct PatternSpec {
    PatternShape shape;
    ScopeKind scope = ScopeKind::AnyColor;
    Color color = 0;  // meaningful for InColor only

    static PatternSpec in_color(PatternShape shape, std::size_t c);
    static PatternSpec any_color(PatternShape shape);
    static PatternSpec rainbow_triangle();

    std::size_t order() const { return scope == ScopeKind::RainbowTriangle ? 3 : shape.order(); }

    friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

/// Textual form used by the CLI: `W5@0`, `C6@any`, `P4@2`, `M2@1`, `K4@any`, `rainbow-K3`.
std::string to_string(const PatternSpec& spec);
PatternSpec parse_pattern(std::string_view text);

/// A concrete copy of a pattern.
///
/// Vertex layout: wheel = hub then rim in cycle order; cycle and path in
/// traversal order; matching as consecutive endpoint pairs; clique ascending;
/// rainbow triangle as three vertices a, b, c. `colors` holds the single color
/// of a monochromatic hit, or for a rainbow triangle the colors of ab, bc, ca.
struct PatternHit {
    PatternShape shape;
    bool rainbow = false;
    std::vector<Vertex> vertices;
    std::vector<Color> colors;

    friend bool operator==(const PatternHit&, const PatternHit&) = default;
};

/// Re-checks a hit edge by edge against g.
bool validate_hit(const EdgeColoring& g, const PatternHit& hit);

std::optional<PatternHit> has_rainbow_triangle(const EdgeColoring& g);

/// Monochromatic copy of spec.shape in the scoped color class(es). AnyColor
/// tries colors in ascending order. Throws PatternTooLarge if the pattern has
/// more vertices than g, InvalidColor for an out-of-palette InColor scope.
std::optional<PatternHit> find_mono(const EdgeColoring& g, const PatternSpec& spec);

/// Number of specs present in g (each contributes 0 or 1). Patterns larger
/// than g are absent.
std::size_t count_violations(const EdgeColoring& g, std::span<const PatternSpec> forbidden);

bool is_pancyclic(const ColorClassGraph& h);
bool is_vertex_pancyclic(const ColorClassGraph& h);

// Graph-level detectors. All searches are exhaustive backtracking over bitset
// neighbourhoods and return the first copy in ascending-label order.

/// Cycle on m vertices inside `allowed` (all vertices when null), optionally
/// forced through `through`.
std::optional<std::vector<Vertex>> find_cycle(const BitGraph& g, std::size_t m,
                                              const VertexSet* allowed = nullptr,
                                              std::optional<Vertex> through = std::nullopt);
std::optional<std::vector<Vertex>> find_wheel(const BitGraph& g, std::size_t m,
                                              std::optional<Vertex> through = std::nullopt);
std::optional<std::vector<Vertex>> find_clique(const BitGraph& g, std::size_t m,
                                               std::optional<Vertex> through = std::nullopt);
std::optional<std::vector<Vertex>> find_path(const BitGraph& g, std::size_t m);
std::optional<std::vector<Vertex>> find_matching(const BitGraph& g, std::size_t edges);

/// Dispatches on the shape. `through` is honoured for wheels, cycles and
/// cliques; paths and matchings ignore it.
std::optional<std::vector<Vertex>> find_shape(const BitGraph& g, const PatternShape& shape,
                                              std::optional<Vertex> through = std::nullopt);

bool supports_through(ShapeKind kind);

}  // namespace gallai
