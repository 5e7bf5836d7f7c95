#include "gallai/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace gallai {

namespace {

PatternShape make_shape(ShapeKind kind, std::size_t m, std::size_t min, const char* name) {
    if (m < min)
        throw Error(ErrorCode::ParameterOutOfRange,
                    std::string(name) + " needs size >= " + std::to_string(min) + ", got " + std::to_string(m));
    return PatternShape{kind, m};
}

}  // namespace

PatternShape PatternShape::wheel(std::size_t m) { return make_shape(ShapeKind::Wheel, m, 4, "wheel"); }
PatternShape PatternShape::cycle(std::size_t m) { return make_shape(ShapeKind::Cycle, m, 3, "cycle"); }
PatternShape PatternShape::path(std::size_t m) { return make_shape(ShapeKind::Path, m, 2, "path"); }
PatternShape PatternShape::matching(std::size_t e) { return make_shape(ShapeKind::Matching, e, 1, "matching"); }
PatternShape PatternShape::clique(std::size_t m) { return make_shape(ShapeKind::Clique, m, 1, "clique"); }

PatternSpec PatternSpec::in_color(PatternShape shape, std::size_t c) {
    if (c > kMaxPalette) throw Error(ErrorCode::InvalidColor, "color index too large");
    return PatternSpec{shape, ScopeKind::InColor, static_cast<Color>(c)};
}

PatternSpec PatternSpec::any_color(PatternShape shape) { return PatternSpec{shape, ScopeKind::AnyColor, 0}; }

PatternSpec PatternSpec::rainbow_triangle() {
    return PatternSpec{PatternShape::clique(3), ScopeKind::RainbowTriangle, 0};
}

std::string to_string(const PatternSpec& spec) {
    if (spec.scope == ScopeKind::RainbowTriangle) return "rainbow-K3";
    char letter = 'K';
    switch (spec.shape.kind) {
        case ShapeKind::Wheel: letter = 'W'; break;
        case ShapeKind::Cycle: letter = 'C'; break;
        case ShapeKind::Path: letter = 'P'; break;
        case ShapeKind::Matching: letter = 'M'; break;
        case ShapeKind::Clique: letter = 'K'; break;
    }
    std::string out(1, letter);
    out += std::to_string(spec.shape.size);
    out += '@';
    out += spec.scope == ScopeKind::AnyColor ? std::string("any") : std::to_string(spec.color);
    return out;
}

PatternSpec parse_pattern(std::string_view text) {
    if (text == "rainbow-K3") return PatternSpec::rainbow_triangle();
    const auto bad = [&] {
        return Error(ErrorCode::Parse, "bad pattern spec '" + std::string(text) + "' (expected e.g. W5@0, C6@any, rainbow-K3)");
    };
    const auto at = text.find('@');
    if (text.size() < 4 || at == std::string_view::npos || at < 2) throw bad();
    const auto scope = text.substr(at + 1);
    // canonical decimals only: no sign, no leading zero
    if (text[1] == '0' || (scope.size() > 1 && scope[0] == '0')) throw bad();
    std::size_t m = 0;
    {
        auto [p, ec] = std::from_chars(text.data() + 1, text.data() + at, m);
        if (ec != std::errc() || p != text.data() + at) throw bad();
    }
    PatternShape shape;
    switch (text[0]) {
        case 'W': shape = PatternShape::wheel(m); break;
        case 'C': shape = PatternShape::cycle(m); break;
        case 'P': shape = PatternShape::path(m); break;
        case 'M': shape = PatternShape::matching(m); break;
        case 'K': shape = PatternShape::clique(m); break;
        default: throw bad();
    }
    if (scope == "any") return PatternSpec::any_color(shape);
    std::size_t c = 0;
    auto [p, ec] = std::from_chars(scope.data(), scope.data() + scope.size(), c);
    if (scope.empty() || ec != std::errc() || p != scope.data() + scope.size()) throw bad();
    return PatternSpec::in_color(shape, c);
}

bool validate_hit(const EdgeColoring& g, const PatternHit& hit) {
    const auto& vs = hit.vertices;
    const std::size_t n = g.order();
    for (Vertex v : vs)
        if (v >= n) return false;
    {
        auto sorted = vs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    }
    if (hit.rainbow) {
        if (vs.size() != 3 || hit.colors.size() != 3) return false;
        for (int i = 0; i < 3; ++i)
            if (g.color(vs[i], vs[(i + 1) % 3]) != hit.colors[i]) return false;
        return hit.colors[0] != hit.colors[1] && hit.colors[1] != hit.colors[2] && hit.colors[0] != hit.colors[2];
    }
    if (hit.colors.size() != 1 || vs.size() != hit.shape.order()) return false;
    const Color c = hit.colors[0];
    const auto is = [&](std::size_t a, std::size_t b) { return g.color(vs[a], vs[b]) == c; };
    const std::size_t m = vs.size();
    switch (hit.shape.kind) {
        case ShapeKind::Wheel:
            for (std::size_t i = 1; i < m; ++i)
                if (!is(0, i) || !is(i, i + 1 < m ? i + 1 : 1)) return false;
            return true;
        case ShapeKind::Cycle:
            for (std::size_t i = 0; i < m; ++i)
                if (!is(i, (i + 1) % m)) return false;
            return true;
        case ShapeKind::Path:
            for (std::size_t i = 0; i + 1 < m; ++i)
                if (!is(i, i + 1)) return false;
            return true;
        case ShapeKind::Matching:
            for (std::size_t i = 0; i < m; i += 2)
                if (!is(i, i + 1)) return false;
            return true;
        case ShapeKind::Clique:
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    if (!is(i, j)) return false;
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Graph-level searches

namespace {

class CycleSearch {
public:
    CycleSearch(const BitGraph& g, std::size_t m)
        : g_(g), m_(m), w_(g.words_per_row()), avail_(w_), scratch_(m * w_) {}

    // Cycle starting at `start` using only vertices of `avail` (start excluded).
    std::optional<std::vector<Vertex>> from(Vertex start, std::span<const Word> avail) {
        std::copy(avail.begin(), avail.end(), avail_.begin());
        start_ = start;
        path_.assign(1, start);
        if (dfs()) return path_;
        return std::nullopt;
    }

private:
    bool dfs() {
        const std::size_t d = path_.size();
        if (d == m_) return true;  // last vertex was chosen adjacent to start
        Word* cand = scratch_.data() + d * w_;
        const auto cur = g_.row(path_.back());
        const auto back = g_.row(start_);
        const bool closing = d + 1 == m_;
        bool nonempty = false;
        for (std::size_t i = 0; i < w_; ++i) {
            cand[i] = cur[i] & avail_[i] & (closing ? back[i] : ~Word{0});
            nonempty |= cand[i] != 0;
        }
        if (!nonempty) return false;
        return for_each_bit(std::span<const Word>(cand, w_), [&](Vertex v) {
            avail_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
            path_.push_back(v);
            if (dfs()) return true;
            path_.pop_back();
            avail_[v / kWordBits] |= Word{1} << (v % kWordBits);
            return false;
        });
    }

    const BitGraph& g_;
    std::size_t m_;
    std::size_t w_;
    std::vector<Word> avail_;
    std::vector<Word> scratch_;
    std::vector<Vertex> path_;
    Vertex start_ = 0;
};

}  // namespace

std::optional<std::vector<Vertex>> find_cycle(const BitGraph& g, std::size_t m, const VertexSet* allowed,
                                              std::optional<Vertex> through) {
    const std::size_t n = g.order();
    if (m < 3 || m > n) return std::nullopt;
    VertexSet pool = allowed ? *allowed : VertexSet::full(n);
    if (pool.count() < m) return std::nullopt;
    CycleSearch search(g, m);
    if (through) {
        if (!pool.test(*through)) return std::nullopt;
        pool.reset(*through);
        return search.from(*through, pool.words());
    }
    // Each cycle is found from its smallest vertex.
    std::optional<std::vector<Vertex>> found;
    for (Vertex s : pool.members()) {
        pool.reset(s);
        if (pool.count() + 1 < m) break;
        if ((found = search.from(s, pool.words()))) break;
    }
    return found;
}

std::optional<std::vector<Vertex>> find_wheel(const BitGraph& g, std::size_t m, std::optional<Vertex> through) {
    const std::size_t n = g.order();
    if (m < 4 || m > n) return std::nullopt;
    const auto with_hub = [&](Vertex hub, std::optional<Vertex> rim_vertex) -> std::optional<std::vector<Vertex>> {
        if (g.degree(hub) < m - 1) return std::nullopt;
        const VertexSet nb = g.neighbours(hub);
        auto rim = find_cycle(g, m - 1, &nb, rim_vertex);
        if (!rim) return std::nullopt;
        std::vector<Vertex> out{hub};
        out.insert(out.end(), rim->begin(), rim->end());
        return out;
    };

    if (through) {
        if (auto w = with_hub(*through, std::nullopt)) return w;
        std::optional<std::vector<Vertex>> found;
        for_each_bit(g.row(*through), [&](Vertex hub) { return bool(found = with_hub(hub, *through)); });
        return found;
    }

    // Smallest degree first; hubs below degree m - 1 cannot host a rim.
    std::vector<Vertex> hubs;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) >= m - 1) hubs.push_back(v);
    std::stable_sort(hubs.begin(), hubs.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    for (Vertex hub : hubs)
        if (auto w = with_hub(hub, std::nullopt)) return w;
    return std::nullopt;
}

namespace {

bool extend_clique(const BitGraph& g, std::size_t m, std::vector<Vertex>& chosen, std::vector<Word> cand) {
    if (chosen.size() == m) return true;
    if (chosen.size() + popcount(cand) < m) return false;
    const std::size_t w = g.words_per_row();
    std::vector<Word> next(w);
    return for_each_bit(std::span<const Word>(cand), [&](Vertex v) {
        // Only later vertices, so each clique is built in ascending order.
        const auto row = g.row(v);
        for (std::size_t i = 0; i < w; ++i) next[i] = cand[i] & row[i];
        for (std::size_t i = 0; i <= v / kWordBits; ++i)
            next[i] &= i < v / kWordBits ? 0 : ~((Word{2} << (v % kWordBits)) - 1);
        chosen.push_back(v);
        if (extend_clique(g, m, chosen, next)) return true;
        chosen.pop_back();
        return false;
    });
}

}  // namespace

std::optional<std::vector<Vertex>> find_clique(const BitGraph& g, std::size_t m, std::optional<Vertex> through) {
    const std::size_t n = g.order();
    if (m < 1 || m > n) return std::nullopt;
    std::vector<Vertex> chosen;
    if (through) {
        chosen.push_back(*through);
        const auto row = g.row(*through);
        if (!extend_clique(g, m, chosen, std::vector<Word>(row.begin(), row.end()))) return std::nullopt;
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }
    const auto all = VertexSet::full(n);
    if (!extend_clique(g, m, chosen, std::vector<Word>(all.words().begin(), all.words().end()))) return std::nullopt;
    return chosen;
}

std::optional<std::vector<Vertex>> find_path(const BitGraph& g, std::size_t m) {
    const std::size_t n = g.order();
    if (m < 1 || m > n) return std::nullopt;
    if (m == 1) return std::vector<Vertex>{0};
    const std::size_t w = g.words_per_row();
    std::vector<Word> avail(w), scratch(m * w);
    std::vector<Vertex> path;

    auto dfs = [&](auto&& self) -> bool {
        const std::size_t d = path.size();
        if (d == m) return true;
        Word* cand = scratch.data() + d * w;
        const auto row = g.row(path.back());
        for (std::size_t i = 0; i < w; ++i) cand[i] = row[i] & avail[i];
        return for_each_bit(std::span<const Word>(cand, w), [&](Vertex v) {
            // A path is reported from its smaller endpoint.
            if (d + 1 == m && v < path.front()) return false;
            avail[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
            path.push_back(v);
            if (self(self)) return true;
            path.pop_back();
            avail[v / kWordBits] |= Word{1} << (v % kWordBits);
            return false;
        });
    };

    const auto all = VertexSet::full(n);
    for (Vertex s = 0; s < n; ++s) {
        if (g.degree(s) == 0) continue;
        std::copy(all.words().begin(), all.words().end(), avail.begin());
        avail[s / kWordBits] &= ~(Word{1} << (s % kWordBits));
        path.assign(1, s);
        if (dfs(dfs)) return path;
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> find_matching(const BitGraph& g, std::size_t edges) {
    const std::size_t n = g.order();
    if (edges < 1 || 2 * edges > n) return std::nullopt;
    using UGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    UGraph ug(n);
    for (Vertex u = 0; u < n; ++u)
        for_each_bit(g.row(u), [&](Vertex v) {
            if (u < v) boost::add_edge(u, v, ug);
            return false;
        });
    std::vector<boost::graph_traits<UGraph>::vertex_descriptor> mate(n);
    boost::edmonds_maximum_cardinality_matching(ug, &mate[0]);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n && out.size() < 2 * edges; ++u) {
        const auto v = mate[u];
        if (v != boost::graph_traits<UGraph>::null_vertex() && u < v) {
            out.push_back(u);
            out.push_back(static_cast<Vertex>(v));
        }
    }
    if (out.size() < 2 * edges) return std::nullopt;
    return out;
}

bool supports_through(ShapeKind kind) {
    return kind == ShapeKind::Wheel || kind == ShapeKind::Cycle || kind == ShapeKind::Clique;
}

std::optional<std::vector<Vertex>> find_shape(const BitGraph& g, const PatternShape& shape,
                                              std::optional<Vertex> through) {
    switch (shape.kind) {
        case ShapeKind::Wheel: return find_wheel(g, shape.size, through);
        case ShapeKind::Cycle: return find_cycle(g, shape.size, nullptr, through);
        case ShapeKind::Clique: return find_clique(g, shape.size, through);
        case ShapeKind::Path: return find_path(g, shape.size);
        case ShapeKind::Matching: return find_matching(g, shape.size);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Coloring-level API

std::optional<PatternHit> has_rainbow_triangle(const EdgeColoring& g) {
    const std::size_t n = g.order(), k = g.palette_size();
    if (n < 3 || k < 3) return std::nullopt;
    const auto classes = color_classes(g);
    const std::size_t w = words_for(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const Color a = g.color(u, v);
            for (std::size_t b = 0; b < k; ++b) {
                if (b == a) continue;
                // w with c(u,w) = b and c(v,w) outside {a, b}
                const auto nu = classes[b].row(u), nvb = classes[b].row(v), nva = classes[a].row(v);
                for (std::size_t i = 0; i < w; ++i) {
                    const Word hits = nu[i] & ~nvb[i] & ~nva[i];
                    if (hits) {
                        const auto x = static_cast<Vertex>(i * kWordBits + std::countr_zero(hits));
                        return PatternHit{PatternShape::clique(3), true, {u, v, x},
                                          {a, g.color(v, x), static_cast<Color>(b)}};
                    }
                }
            }
        }
    return std::nullopt;
}

std::optional<PatternHit> find_mono(const EdgeColoring& g, const PatternSpec& spec) {
    if (spec.scope == ScopeKind::RainbowTriangle)
        throw Error(ErrorCode::ParameterOutOfRange, "find_mono does not handle rainbow scopes");
    if (spec.order() > g.order())
        throw Error(ErrorCode::PatternTooLarge, to_string(spec) + " has " + std::to_string(spec.order()) +
                                                    " vertices but the coloring has " + std::to_string(g.order()));
    if (spec.scope == ScopeKind::InColor && spec.color >= g.palette_size())
        throw Error(ErrorCode::InvalidColor, "color " + std::to_string(spec.color) + " >= palette size");

    const auto search = [&](std::size_t c) -> std::optional<PatternHit> {
        const auto h = color_class_graph(g, c);
        if (auto vs = find_shape(h, spec.shape)) return PatternHit{spec.shape, false, std::move(*vs), {static_cast<Color>(c)}};
        return std::nullopt;
    };
    if (spec.scope == ScopeKind::InColor) return search(spec.color);
    for (std::size_t c = 0; c < g.palette_size(); ++c)
        if (auto hit = search(c)) return hit;
    return std::nullopt;
}

std::size_t count_violations(const EdgeColoring& g, std::span<const PatternSpec> forbidden) {
    std::size_t count = 0;
    for (const auto& spec : forbidden) {
        if (spec.scope == ScopeKind::RainbowTriangle) {
            count += has_rainbow_triangle(g).has_value();
        } else if (spec.order() <= g.order()) {
            count += find_mono(g, spec).has_value();
        }
    }
    return count;
}

bool is_pancyclic(const ColorClassGraph& h) {
    const std::size_t n = h.order();
    if (n < 3) throw Error(ErrorCode::OrderTooSmall, "pancyclicity needs at least 3 vertices");
    for (std::size_t len = 3; len <= n; ++len)
        if (!find_cycle(h, len)) return false;
    return true;
}

bool is_vertex_pancyclic(const ColorClassGraph& h) {
    const std::size_t n = h.order();
    if (n < 3) throw Error(ErrorCode::OrderTooSmall, "pancyclicity needs at least 3 vertices");
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t len = 3; len <= n; ++len)
            if (!find_cycle(h, len, nullptr, v)) return false;
    return true;
}

}  // namespace gallai
