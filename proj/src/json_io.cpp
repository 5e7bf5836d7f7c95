#include "gallai/json_io.hpp"

#include <algorithm>
#include <limits>

namespace gallai {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

std::size_t get_size(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_unsigned()) bad(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

Json big(BoundInt v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return to_string(v);
}

}  // namespace

Json coloring_to_json(const EdgeColoring& g) {
    Json rows = Json::array();
    for (Vertex u = 0; u + 1 < g.order(); ++u) {
        Json row = Json::array();
        for (Vertex v = u + 1; v < g.order(); ++v) row.push_back(g.color(u, v));
        rows.push_back(std::move(row));
    }
    return Json{{"n", g.order()}, {"k", g.palette_size()}, {"rows", std::move(rows)}};
}

EdgeColoring coloring_from_json(const Json& j) {
    const std::size_t n = get_size(j, "n"), k = get_size(j, "k");
    if (!j.contains("rows") || !j["rows"].is_array()) bad("missing field 'rows'");
    const auto& rows = j["rows"];
    if (n == 0 || rows.size() != n - 1) bad("expected " + std::to_string(n == 0 ? 0 : n - 1) + " rows");
    for (std::size_t u = 0; u + 1 < n; ++u) {
        const auto& row = rows[u];
        if (!row.is_array() || row.size() != n - 1 - u) bad("row " + std::to_string(u) + " has the wrong length");
        for (const auto& c : row)
            if (!c.is_number_unsigned()) bad("row " + std::to_string(u) + " holds a non-integer color");
    }
    return EdgeColoring::from_function(n, k, [&](Vertex u, Vertex v) {
        return rows[u][v - u - 1].get<std::size_t>();
    });
}

Json partition_to_json(const GallaiPartition& p) {
    Json pairs = Json::array();
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (std::size_t j = i + 1; j < p.parts.size(); ++j) pairs.push_back({i, j, p.pair_colors[i][j]});
    return Json{{"parts", p.parts}, {"between_colors", p.between_colors}, {"pair_colors", std::move(pairs)}};
}

GallaiPartition partition_from_json(const EdgeColoring& g, const Json& j) {
    if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array()) bad("missing field 'parts'");
    std::vector<std::vector<Vertex>> parts;
    for (const auto& part : j["parts"]) {
        if (!part.is_array()) bad("each part must be an array of vertices");
        auto& out = parts.emplace_back();
        for (const auto& v : part) {
            if (!v.is_number_unsigned()) bad("part members must be non-negative integers");
            const auto x = v.get<std::uint64_t>();
            if (x >= g.order()) throw Error(ErrorCode::MalformedPartition, "vertex " + std::to_string(x) + " out of range");
            out.push_back(static_cast<Vertex>(x));
        }
    }
    GallaiPartition p;
    p.parts = std::move(parts);
    const std::size_t q = p.parts.size();
    p.pair_colors.assign(q, std::vector<Color>(q, 0));
    if (j.contains("pair_colors")) {
        for (const auto& t : j["pair_colors"]) {
            if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
                !t[2].is_number_unsigned())
                bad("pair_colors entries are [i, j, color]");
            const auto a = t[0].get<std::size_t>(), b = t[1].get<std::size_t>();
            const auto c = t[2].get<std::size_t>();
            if (a >= q || b >= q || a == b) throw Error(ErrorCode::MalformedPartition, "pair_colors index out of range");
            if (c >= g.palette_size()) throw Error(ErrorCode::InvalidColor, "pair color outside the palette");
            p.pair_colors[a][b] = p.pair_colors[b][a] = static_cast<Color>(c);
        }
    } else {
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = a + 1; b < q; ++b)
                if (!p.parts[a].empty() && !p.parts[b].empty())
                    p.pair_colors[a][b] = p.pair_colors[b][a] = g.color(p.parts[a][0], p.parts[b][0]);
    }
    if (j.contains("between_colors")) {
        p.between_colors.clear();
        for (const auto& c : j["between_colors"]) {
            if (!c.is_number_unsigned()) bad("between_colors must be non-negative integers");
            if (c.get<std::size_t>() >= g.palette_size()) throw Error(ErrorCode::InvalidColor, "between color outside the palette");
            p.between_colors.push_back(c.get<Color>());
        }
    } else {
        p.between_colors.clear();
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = a + 1; b < q; ++b) p.between_colors.push_back(p.pair_colors[a][b]);
        std::sort(p.between_colors.begin(), p.between_colors.end());
        p.between_colors.erase(std::unique(p.between_colors.begin(), p.between_colors.end()), p.between_colors.end());
    }
    return p;
}

Json report_to_json(const PartitionReport& r) {
    static const char* names[] = {"none", "trivial", "cross-edge-color", "pair-color-not-between",
                                  "too-many-between-colors"};
    Json j{{"valid", r.valid}, {"violation", names[static_cast<int>(r.violation)]}};
    if (r.edge) j["edge"] = {r.edge->first, r.edge->second};
    j["message"] = r.message;
    return j;
}

Json hit_to_json(const PatternHit& hit) {
    static const char* kinds[] = {"wheel", "cycle", "path", "matching", "clique"};
    Json j{{"shape", hit.rainbow ? "rainbow-triangle" : kinds[static_cast<int>(hit.shape.kind)]}};
    if (!hit.rainbow) j["size"] = hit.shape.size;
    j["vertices"] = hit.vertices;
    j["colors"] = hit.colors;
    return j;
}

Json bound_to_json(const BoundResult& r) {
    Json j;
    if (r.is_exact()) {
        j["kind"] = "exact";
        j["value"] = big(r.value());
    } else {
        j["kind"] = "interval";
        j["lo"] = big(r.lo);
        j["hi"] = big(r.hi);
    }
    j["formula_id"] = r.formula_id;
    j["notes"] = r.notes;
    return j;
}

Json stats_to_json(const SearchStats& s, bool timing) {
    Json j{{"nodes", s.nodes}, {"pattern_prunes", s.pattern_prunes}, {"canonicity_prunes", s.canonicity_prunes}};
    if (timing) j["elapsed_seconds"] = s.elapsed_seconds;
    return j;
}

Json outcome_to_json(const SearchOutcome& o, bool timing) {
    Json j{{"status", to_string(o.status)}};
    j["witness"] = o.witness ? Json(serialize(*o.witness)) : Json(nullptr);
    j["stats"] = stats_to_json(o.stats, timing);
    return j;
}

Json least_order_to_json(const LeastOrder& r, bool timing) {
    Json j{{"resolved", r.resolved}};
    if (r.resolved) j["value"] = r.value;
    j["lo"] = r.lo;
    j["hi"] = r.hi ? Json(*r.hi) : Json(nullptr);
    j["witness"] = r.witness ? Json(serialize(*r.witness)) : Json(nullptr);
    j["stats_at_value"] = r.stats_at_value ? stats_to_json(*r.stats_at_value, timing) : Json(nullptr);
    Json probes = Json::array();
    for (const auto& [n, status] : r.probes) probes.push_back({{"n", n}, {"status", to_string(status)}});
    j["probes"] = std::move(probes);
    return j;
}

SearchTask task_from_json(const Json& j) {
    SearchTask t;
    t.n = get_size(j, "n");
    t.k = get_size(j, "k");
    if (!j.contains("forbidden") || !j["forbidden"].is_array()) bad("missing field 'forbidden'");
    for (const auto& s : j["forbidden"]) {
        if (!s.is_string()) bad("forbidden entries are pattern strings such as \"C5@0\"");
        t.forbidden.push_back(parse_pattern(s.get<std::string>()));
    }
    if (j.contains("limits")) {
        const auto& l = j["limits"];
        if (!l.is_object()) bad("'limits' must be an object");
        if (l.contains("nodes") && !l["nodes"].is_null()) t.node_budget = get_size(l, "nodes");
        if (l.contains("seconds") && !l["seconds"].is_null()) {
            if (!l["seconds"].is_number() || l["seconds"].get<double>() < 0) bad("'seconds' must be a non-negative number");
            t.time_budget_seconds = l["seconds"].get<double>();
        }
    }
    validate(t);
    return t;
}

Json task_to_json(const SearchTask& t) {
    Json forbidden = Json::array();
    for (const auto& s : t.forbidden) forbidden.push_back(to_string(s));
    Json limits = Json::object();
    if (t.node_budget) limits["nodes"] = *t.node_budget;
    if (t.time_budget_seconds) limits["seconds"] = *t.time_budget_seconds;
    return Json{{"n", t.n}, {"k", t.k}, {"forbidden", std::move(forbidden)}, {"limits", std::move(limits)}};
}

}  // namespace gallai
