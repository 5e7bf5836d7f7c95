#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/bitgraph.hpp"
#include "gallai/errors.hpp"

#ifndef GALLAI_MAX_ORDER
#define GALLAI_MAX_ORDER 4096
#endif

namespace gallai {

using Color = std::uint16_t;

inline constexpr std::size_t kMaxOrder = GALLAI_MAX_ORDER;
inline constexpr std::size_t kMaxPalette = 65535;

/// Edges of one color class, as a simple graph on the parent's vertex set.
using ColorClassGraph = BitGraph;

/// A k-edge-coloring of the complete graph on vertices 0..n-1.
///
/// Every unordered pair of distinct vertices carries exactly one color in [0, k).
/// Instances are immutable values; "modifying" operations return new colorings.
class EdgeColoring {
public:
    /// Builds a coloring from f(u, v) for u < v. Throws InvalidColor when f
    /// returns a color outside the palette.
    template <typename F>
    static EdgeColoring from_function(std::size_t n, std::size_t k, F&& f) {
        EdgeColoring g(n, k);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) g.set(u, v, static_cast<std::size_t>(f(u, v)));
        return g;
    }

    std::size_t order() const { return n_; }
    std::size_t palette_size() const { return k_; }
    std::size_t pair_count() const { return n_ * (n_ - 1) / 2; }

    /// Color of {u, v}. Requires u != v, both < order().
    Color color(Vertex u, Vertex v) const { return colors_[u * n_ + v]; }

    /// Number of pairs carrying each color.
    std::vector<std::size_t> color_counts() const;

    /// Restriction to the given vertices, relabelled 0..|vs|-1 in list order.
    EdgeColoring induced(std::span<const Vertex> vs) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    EdgeColoring(std::size_t n, std::size_t k);
    void set(Vertex u, Vertex v, std::size_t c);

    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::vector<Color> colors_;

    friend EdgeColoring recolor(const EdgeColoring&, Vertex, Vertex, std::size_t);
};

EdgeColoring new_uniform(std::size_t n, std::size_t c, std::size_t k);

/// Copy of g with {u, v} recolored to c.
EdgeColoring recolor(const EdgeColoring& g, Vertex u, Vertex v, std::size_t c);

ColorClassGraph color_class_graph(const EdgeColoring& g, std::size_t c);

/// All k class graphs, indexed by color.
std::vector<ColorClassGraph> color_classes(const EdgeColoring& g);

enum class Role { Wasted, Useful, Absent };

struct ColorRole {
    Color color;
    Role role;

    friend bool operator==(const ColorRole&, const ColorRole&) = default;
};

struct ColorClassification {
    std::vector<ColorRole> roles;
    // A Gallai coloring needs the union of its wasted classes to be a matching.
    bool wasted_union_is_matching = true;
};

ColorClassification classify_colors(const EdgeColoring& g);

/// Maps the palettes of a substitution's inputs into the output palette.
struct PaletteMap {
    std::size_t joint_palette = 0;
    std::vector<Color> reduced;             // reduced color -> joint color
    std::vector<std::vector<Color>> parts;  // per part: part color -> joint color

    /// Every palette mapped onto itself; the joint palette is the largest input palette.
    static PaletteMap identity(const EdgeColoring& reduced, std::span<const EdgeColoring> parts);
};

/// Replaces vertex i of `reduced` by the coloring parts[i]. Pairs inside part i
/// keep part i's (mapped) color; pairs across parts i < j take reduced(i, j).
/// Output labels are assigned part by part in input order.
EdgeColoring substitute(const EdgeColoring& reduced, std::span<const EdgeColoring> parts,
                        const PaletteMap& palette_map);

/// Canonical "ecg" text: header `ecg <n> <k>`, then the upper triangle row by row.
std::string serialize(const EdgeColoring& g);
EdgeColoring parse(std::string_view text);

}  // namespace gallai
