#include "gallai/coloring.hpp"

#include <algorithm>
#include <charconv>

namespace gallai {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidColor: return "InvalidColor";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::PaletteCollision: return "PaletteCollision";
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::PatternTooLarge: return "PatternTooLarge";
        case ErrorCode::OrderTooSmall: return "OrderTooSmall";
        case ErrorCode::MalformedPartition: return "MalformedPartition";
        case ErrorCode::NotGallai: return "NotGallai";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::InvalidBase: return "InvalidBase";
        case ErrorCode::ArgumentOrder: return "ArgumentOrder";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

EdgeColoring::EdgeColoring(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (n < 1 || n > kMaxOrder)
        throw Error(ErrorCode::ParameterOutOfRange,
                    "order " + std::to_string(n) + " outside [1, " + std::to_string(kMaxOrder) + "]");
    if (k < 1 || k > kMaxPalette)
        throw Error(ErrorCode::ParameterOutOfRange, "palette size " + std::to_string(k) + " out of range");
    colors_.assign(n * n, 0);
}

void EdgeColoring::set(Vertex u, Vertex v, std::size_t c) {
    if (c >= k_)
        throw Error(ErrorCode::InvalidColor,
                    "color " + std::to_string(c) + " >= palette size " + std::to_string(k_));
    colors_[u * n_ + v] = static_cast<Color>(c);
    colors_[v * n_ + u] = static_cast<Color>(c);
}

std::vector<std::size_t> EdgeColoring::color_counts() const {
    std::vector<std::size_t> counts(k_, 0);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v) ++counts[color(u, v)];
    return counts;
}

EdgeColoring EdgeColoring::induced(std::span<const Vertex> vs) const {
    for (Vertex v : vs)
        if (v >= n_) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    return from_function(vs.size(), k_, [&](Vertex a, Vertex b) { return color(vs[a], vs[b]); });
}

EdgeColoring new_uniform(std::size_t n, std::size_t c, std::size_t k) {
    if (c >= k)
        throw Error(ErrorCode::InvalidColor, "color " + std::to_string(c) + " >= palette size " + std::to_string(k));
    return EdgeColoring::from_function(n, k, [c](Vertex, Vertex) { return c; });
}

EdgeColoring recolor(const EdgeColoring& g, Vertex u, Vertex v, std::size_t c) {
    if (u == v) throw Error(ErrorCode::LoopEdge, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} is a loop");
    if (u >= g.order() || v >= g.order())
        throw Error(ErrorCode::VertexOutOfRange, "vertex out of range");
    EdgeColoring out = g;
    out.set(u, v, c);
    return out;
}

ColorClassGraph color_class_graph(const EdgeColoring& g, std::size_t c) {
    if (c >= g.palette_size())
        throw Error(ErrorCode::InvalidColor, "color " + std::to_string(c) + " >= palette size");
    ColorClassGraph h(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.color(u, v) == c) h.add_edge(u, v);
    return h;
}

std::vector<ColorClassGraph> color_classes(const EdgeColoring& g) {
    std::vector<ColorClassGraph> out(g.palette_size(), ColorClassGraph(g.order()));
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) out[g.color(u, v)].add_edge(u, v);
    return out;
}

ColorClassification classify_colors(const EdgeColoring& g) {
    ColorClassification result;
    const auto classes = color_classes(g);
    std::vector<std::size_t> wasted_degree(g.order(), 0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& h = classes[c];
        Role role = Role::Absent;
        if (h.edge_count() > 0) role = h.max_degree() == 1 ? Role::Wasted : Role::Useful;
        result.roles.push_back({static_cast<Color>(c), role});
        if (role == Role::Wasted)
            for (Vertex v = 0; v < h.order(); ++v) wasted_degree[v] += h.degree(v);
    }
    result.wasted_union_is_matching =
        std::all_of(wasted_degree.begin(), wasted_degree.end(), [](std::size_t d) { return d <= 1; });
    return result;
}

PaletteMap PaletteMap::identity(const EdgeColoring& reduced, std::span<const EdgeColoring> parts) {
    PaletteMap m;
    m.joint_palette = reduced.palette_size();
    for (const auto& p : parts) m.joint_palette = std::max(m.joint_palette, p.palette_size());
    auto iota = [](std::size_t k) {
        std::vector<Color> v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = static_cast<Color>(i);
        return v;
    };
    m.reduced = iota(reduced.palette_size());
    for (const auto& p : parts) m.parts.push_back(iota(p.palette_size()));
    return m;
}

namespace {

void check_map(const std::vector<Color>& map, std::size_t source_palette, std::size_t joint,
               const std::string& what) {
    if (map.size() != source_palette)
        throw Error(ErrorCode::ParameterOutOfRange, what + " palette map has wrong length");
    std::vector<bool> seen(joint, false);
    for (Color c : map) {
        if (c >= joint) throw Error(ErrorCode::InvalidColor, what + " maps outside the joint palette");
        if (seen[c]) throw Error(ErrorCode::PaletteCollision, what + " palette map is not injective");
        seen[c] = true;
    }
}

}  // namespace

EdgeColoring substitute(const EdgeColoring& reduced, std::span<const EdgeColoring> parts,
                        const PaletteMap& palette_map) {
    const std::size_t q = reduced.order();
    if (parts.size() != q)
        throw Error(ErrorCode::ParameterOutOfRange, "substitute needs one part per reduced vertex");
    if (palette_map.parts.size() != q)
        throw Error(ErrorCode::ParameterOutOfRange, "palette map needs one entry per part");
    check_map(palette_map.reduced, reduced.palette_size(), palette_map.joint_palette, "reduced");
    for (std::size_t i = 0; i < q; ++i)
        check_map(palette_map.parts[i], parts[i].palette_size(), palette_map.joint_palette,
                  "part " + std::to_string(i));

    std::vector<Vertex> owner;
    std::vector<Vertex> local;
    for (std::size_t i = 0; i < q; ++i)
        for (Vertex v = 0; v < parts[i].order(); ++v) {
            owner.push_back(static_cast<Vertex>(i));
            local.push_back(v);
        }
    if (owner.size() > kMaxOrder)
        throw Error(ErrorCode::ParameterOutOfRange, "substituted order exceeds the supported maximum");

    return EdgeColoring::from_function(owner.size(), palette_map.joint_palette, [&](Vertex u, Vertex v) {
        const Vertex a = owner[u], b = owner[v];
        if (a == b) return palette_map.parts[a][parts[a].color(local[u], local[v])];
        return palette_map.reduced[reduced.color(a, b)];
    });
}

std::string serialize(const EdgeColoring& g) {
    std::string out = "ecg " + std::to_string(g.order()) + " " + std::to_string(g.palette_size()) + "\n";
    for (Vertex u = 0; u + 1 < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (v > u + 1) out += ' ';
            out += std::to_string(g.color(u, v));
        }
        out += '\n';
    }
    return out;
}

namespace {

// Canonical unsigned decimal: no sign, no leading zeros.
bool parse_uint(std::string_view tok, std::size_t& out) {
    if (tok.empty() || (tok.size() > 1 && tok[0] == '0')) return false;
    const auto* end = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc() && p == end;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(' ', start);
        toks.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return toks;
}

}  // namespace

EdgeColoring parse(std::string_view text) {
    if (text.empty() || text.back() != '\n') throw ParseError(ErrorCode::Parse, 1, "missing trailing newline");
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start < text.size();) {
        const auto pos = text.find('\n', start);
        lines.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }

    const auto header = split_spaces(lines[0]);
    std::size_t n = 0, k = 0;
    if (header.size() != 3 || header[0] != "ecg" || !parse_uint(header[1], n) || !parse_uint(header[2], k))
        throw ParseError(ErrorCode::Parse, 1, "expected header 'ecg <n> <k>'");
    if (n < 1 || n > kMaxOrder) throw ParseError(ErrorCode::Parse, 1, "order out of range");
    if (k < 1 || k > kMaxPalette) throw ParseError(ErrorCode::Parse, 1, "palette size out of range");
    if (lines.size() != n)
        throw ParseError(ErrorCode::Parse, std::min(lines.size(), n) + 1,
                         "expected " + std::to_string(n - 1) + " rows, found " + std::to_string(lines.size() - 1));

    std::vector<std::vector<std::size_t>> rows(n);
    for (std::size_t i = 1; i < n; ++i) {
        const auto toks = split_spaces(lines[i]);
        const std::size_t line_no = i + 1;
        if (toks.size() != n - i)
            throw ParseError(ErrorCode::Parse, line_no,
                             "expected " + std::to_string(n - i) + " entries, found " + std::to_string(toks.size()));
        for (auto tok : toks) {
            std::size_t c = 0;
            if (!parse_uint(tok, c)) throw ParseError(ErrorCode::Parse, line_no, "bad entry '" + std::string(tok) + "'");
            if (c >= k)
                throw ParseError(ErrorCode::InvalidColor, line_no,
                                 "color " + std::to_string(c) + " >= palette size " + std::to_string(k));
            rows[i - 1].push_back(c);
        }
    }
    return EdgeColoring::from_function(n, k, [&](Vertex u, Vertex v) { return rows[u][v - u - 1]; });
}

}  // namespace gallai
