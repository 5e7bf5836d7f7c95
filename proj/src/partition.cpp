#include "gallai/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gallai/pattern.hpp"

namespace gallai {

namespace {

// part index of every vertex; throws MalformedPartition on overlap, gaps or empty parts
std::vector<std::size_t> owners(std::size_t n, const std::vector<std::vector<Vertex>>& parts) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(n, unset);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty()) throw Error(ErrorCode::MalformedPartition, "part " + std::to_string(i) + " is empty");
        for (Vertex v : parts[i]) {
            if (v >= n) throw Error(ErrorCode::MalformedPartition, "vertex " + std::to_string(v) + " out of range");
            if (owner[v] != unset)
                throw Error(ErrorCode::MalformedPartition, "vertex " + std::to_string(v) + " is in two parts");
            owner[v] = i;
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (owner[v] == unset) throw Error(ErrorCode::MalformedPartition, "vertex " + std::to_string(v) + " is in no part");
    return owner;
}

std::string edge_text(Vertex u, Vertex v) { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; }

}  // namespace

GallaiPartition GallaiPartition::from_parts(const EdgeColoring& g, std::vector<std::vector<Vertex>> parts) {
    for (auto& part : parts) std::sort(part.begin(), part.end());
    owners(g.order(), parts);
    GallaiPartition p;
    p.parts = std::move(parts);
    const std::size_t q = p.parts.size();
    p.pair_colors.assign(q, std::vector<Color>(q, 0));
    std::set<Color> used;
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j) {
            const Color c = g.color(p.parts[i].front(), p.parts[j].front());
            p.pair_colors[i][j] = p.pair_colors[j][i] = c;
            used.insert(c);
        }
    p.between_colors.assign(used.begin(), used.end());
    return p;
}

PartitionReport verify_partition(const EdgeColoring& g, const GallaiPartition& p) {
    const std::size_t q = p.parts.size();
    const auto owner = owners(g.order(), p.parts);
    if (p.pair_colors.size() != q ||
        std::any_of(p.pair_colors.begin(), p.pair_colors.end(), [q](const auto& row) { return row.size() != q; }))
        throw Error(ErrorCode::MalformedPartition, "pair color matrix must be " + std::to_string(q) + " x " + std::to_string(q));

    PartitionReport report;
    const auto fail = [&](PartitionViolation why, std::string msg) {
        report.valid = false;
        report.violation = why;
        report.message = std::move(msg);
        return report;
    };
    if (q < 2) return fail(PartitionViolation::Trivial, "partition has fewer than two parts");

    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            const auto a = owner[u], b = owner[v];
            if (a == b) continue;
            if (g.color(u, v) != p.pair_colors[a][b]) {
                report.edge = {u, v};
                return fail(PartitionViolation::CrossEdgeColor,
                            "edge " + edge_text(u, v) + " has color " + std::to_string(g.color(u, v)) +
                                " but parts " + std::to_string(a) + "," + std::to_string(b) + " are joined in color " +
                                std::to_string(p.pair_colors[a][b]));
            }
        }

    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j) {
            if (p.pair_colors[i][j] != p.pair_colors[j][i])
                throw Error(ErrorCode::MalformedPartition, "pair color matrix is not symmetric");
            const Color c = p.pair_colors[i][j];
            if (std::find(p.between_colors.begin(), p.between_colors.end(), c) == p.between_colors.end()) {
                report.edge = {p.parts[i].front(), p.parts[j].front()};
                return fail(PartitionViolation::PairColorNotBetween,
                            "parts " + std::to_string(i) + "," + std::to_string(j) + " use color " + std::to_string(c) +
                                " outside between_colors");
            }
        }

    std::set<Color> distinct(p.between_colors.begin(), p.between_colors.end());
    if (distinct.size() > 2) {
        // report the first cross edge carrying a color beyond the first two
        std::set<Color> seen;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v) {
                if (owner[u] == owner[v]) continue;
                seen.insert(g.color(u, v));
                if (seen.size() > 2) {
                    report.edge = {u, v};
                    return fail(PartitionViolation::TooManyBetweenColors,
                                std::to_string(distinct.size()) + " colors between parts; edge " + edge_text(u, v) +
                                    " carries a third");
                }
            }
        return fail(PartitionViolation::TooManyBetweenColors, "more than two between colors");
    }
    return report;
}

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent;
};

// Components of the graph of edges colored outside `allowed`, then merges of
// part pairs that see both allowed colors, lowest pair first. Returns parts
// ordered by smallest vertex.
std::vector<std::vector<Vertex>> candidate_parts(const EdgeColoring& g, const std::vector<Color>& allowed) {
    const std::size_t n = g.order();
    const auto in_allowed = [&](Color c) { return std::find(allowed.begin(), allowed.end(), c) != allowed.end(); };
    DisjointSets dsu(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!in_allowed(g.color(u, v))) dsu.unite(u, v);

    while (true) {
        std::vector<std::size_t> roots;
        std::vector<std::size_t> index(n, 0);
        for (Vertex v = 0; v < n; ++v)
            if (dsu.find(v) == v) {
                index[v] = roots.size();
                roots.push_back(v);
            }
        const std::size_t q = roots.size();
        if (q < 2 || allowed.size() < 2) break;
        // bit 0: first allowed color seen across, bit 1: second
        std::vector<unsigned> seen(q * q, 0);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                const auto a = index[dsu.find(u)], b = index[dsu.find(v)];
                if (a == b) continue;
                const unsigned bit = g.color(u, v) == allowed[0] ? 1U : 2U;
                seen[std::min(a, b) * q + std::max(a, b)] |= bit;
            }
        bool merged = false;
        for (std::size_t a = 0; a < q && !merged; ++a)
            for (std::size_t b = a + 1; b < q && !merged; ++b)
                if (seen[a * q + b] == 3U) {
                    dsu.unite(roots[a], roots[b]);
                    merged = true;
                }
        if (!merged) break;
    }

    std::vector<std::vector<Vertex>> parts;
    std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
    for (Vertex v = 0; v < n; ++v) {
        const auto r = dsu.find(v);
        if (slot[r] == static_cast<std::size_t>(-1)) {
            slot[r] = parts.size();
            parts.emplace_back();
        }
        parts[slot[r]].push_back(v);
    }
    return parts;
}

}  // namespace

GallaiPartition find_gallai_partition(const EdgeColoring& g) {
    if (g.order() < 2) throw Error(ErrorCode::OrderTooSmall, "a Gallai partition needs at least two vertices");
    if (auto hit = has_rainbow_triangle(g))
        throw Error(ErrorCode::NotGallai, "rainbow triangle on vertices " + std::to_string(hit->vertices[0]) + "," +
                                              std::to_string(hit->vertices[1]) + "," + std::to_string(hit->vertices[2]));

    std::vector<Color> present;
    const auto counts = g.color_counts();
    for (std::size_t c = 0; c < counts.size(); ++c)
        if (counts[c] > 0) present.push_back(static_cast<Color>(c));

    std::vector<std::vector<Color>> candidates;
    for (Color c : present) candidates.push_back({c});
    for (std::size_t i = 0; i < present.size(); ++i)
        for (std::size_t j = i + 1; j < present.size(); ++j) candidates.push_back({present[i], present[j]});

    for (const auto& allowed : candidates) {
        auto parts = candidate_parts(g, allowed);
        if (parts.size() < 2) continue;
        auto p = GallaiPartition::from_parts(g, std::move(parts));
        if (verify_partition(g, p).valid) return p;
    }
    throw Error(ErrorCode::InternalInconsistency, "no Gallai partition found for a rainbow-triangle-free coloring");
}

ReducedGraph reduced_graph(const EdgeColoring& g, const GallaiPartition& p) {
    const auto report = verify_partition(g, p);
    if (!report.valid) throw Error(ErrorCode::InvalidPartition, report.message);
    std::vector<Color> palette = p.between_colors;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    const auto dense = [&](Color c) {
        return static_cast<std::size_t>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
    };
    auto coloring = EdgeColoring::from_function(p.parts.size(), std::max<std::size_t>(palette.size(), 1),
                                                [&](Vertex i, Vertex j) { return dense(p.pair_colors[i][j]); });
    return {std::move(coloring), std::move(palette)};
}

}  // namespace gallai
