#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <optional>
#include <mutex>
#include <random>
#include <thread>

#include "gallai/constructions.hpp"

namespace gallai {

namespace {

struct Anchor {
    std::size_t spec = 0;
    Color color = 0;
    Vertex vertex = 0;
};

// Mutable coloring plus per-color class graphs, with a guiding objective that
// is zero exactly when no forbidden spec is present.
class Trajectory {
public:
    Trajectory(std::size_t n, std::size_t k, const std::vector<PatternSpec>& forbidden, std::uint64_t seed)
        : n_(n), k_(k), forbidden_(forbidden), rng_(seed), colors_(n * n, 0), classes_(k, BitGraph(n)) {}

    void randomize() {
        for (auto& g : classes_) g = BitGraph(n_);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v) assign(u, v, static_cast<Color>(rng_() % k_), true);
    }

    Color color(Vertex u, Vertex v) const { return colors_[u * n_ + v]; }

    void assign(Vertex u, Vertex v, Color c, bool fresh = false) {
        if (!fresh) classes_[color(u, v)].remove_edge(u, v);
        colors_[u * n_ + v] = colors_[v * n_ + u] = c;
        classes_[c].add_edge(u, v);
    }

    // Objective; fills anchors when requested.
    std::size_t cost(std::vector<Anchor>* anchors) const {
        std::size_t total = 0;
        for (std::size_t s = 0; s < forbidden_.size(); ++s) {
            const auto& spec = forbidden_[s];
            if (spec.scope == ScopeKind::RainbowTriangle) {
                total += rainbow_cost(s, anchors);
                continue;
            }
            if (spec.order() > n_) continue;
            const std::size_t lo = spec.scope == ScopeKind::InColor ? spec.color : 0;
            const std::size_t hi = spec.scope == ScopeKind::InColor ? spec.color + 1 : k_;
            for (std::size_t c = lo; c < hi; ++c) {
                const auto& h = classes_[c];
                if (!supports_through(spec.shape.kind)) {
                    if (find_shape(h, spec.shape)) {
                        ++total;
                        if (anchors) anchors->push_back({s, static_cast<Color>(c), 0});
                    }
                    continue;
                }
                for (Vertex v = 0; v < n_; ++v) {
                    // wheels are counted by hub, the rest by any vertex on a copy
                    const bool hit = spec.shape.kind == ShapeKind::Wheel
                                         ? hub_hit(h, spec.shape.size, v)
                                         : find_shape(h, spec.shape, v).has_value();
                    if (hit) {
                        ++total;
                        if (anchors) anchors->push_back({s, static_cast<Color>(c), v});
                    }
                }
            }
        }
        return total;
    }

    // Pairs of some forbidden copy around the anchor.
    std::vector<std::pair<Vertex, Vertex>> conflict_edges(const Anchor& a) {
        const auto& spec = forbidden_[a.spec];
        std::vector<std::pair<Vertex, Vertex>> edges;
        if (spec.scope == ScopeKind::RainbowTriangle) {
            const auto tri = rainbow_through(a.vertex);
            if (tri) edges = {{(*tri)[0], (*tri)[1]}, {(*tri)[1], (*tri)[2]}, {(*tri)[0], (*tri)[2]}};
            return edges;
        }
        const auto& h = classes_[a.color];
        const auto vs = supports_through(spec.shape.kind) ? find_shape(h, spec.shape, a.vertex) : find_shape(h, spec.shape);
        if (!vs) return edges;
        for (std::size_t i = 0; i < vs->size(); ++i)
            for (std::size_t j = i + 1; j < vs->size(); ++j)
                if (h.has_edge((*vs)[i], (*vs)[j])) edges.emplace_back((*vs)[i], (*vs)[j]);
        return edges;
    }

    std::mt19937_64& rng() { return rng_; }
    std::size_t order() const { return n_; }
    std::size_t palette() const { return k_; }

    EdgeColoring snapshot() const {
        return EdgeColoring::from_function(n_, k_, [&](Vertex u, Vertex v) { return color(u, v); });
    }

private:
    bool hub_hit(const BitGraph& h, std::size_t m, Vertex hub) const {
        if (h.degree(hub) < m - 1) return false;
        const VertexSet nb = h.neighbours(hub);
        return find_cycle(h, m - 1, &nb).has_value();
    }

    bool rainbow(Vertex a, Vertex b, Vertex c) const {
        const Color x = color(a, b), y = color(b, c), z = color(a, c);
        return x != y && y != z && x != z;
    }

    std::optional<std::array<Vertex, 3>> rainbow_through(Vertex v) const {
        for (Vertex a = 0; a < n_; ++a)
            for (Vertex b = a + 1; b < n_; ++b)
                if (a != v && b != v && rainbow(v, a, b)) return std::array<Vertex, 3>{v, a, b};
        return std::nullopt;
    }

    std::size_t rainbow_cost(std::size_t s, std::vector<Anchor>* anchors) const {
        if (k_ < 3) return 0;
        std::size_t total = 0;
        for (Vertex a = 0; a < n_; ++a)
            for (Vertex b = a + 1; b < n_; ++b)
                for (Vertex c = b + 1; c < n_; ++c)
                    if (rainbow(a, b, c)) {
                        ++total;
                        if (anchors) anchors->push_back({s, 0, a});
                    }
        return total;
    }

    std::size_t n_;
    std::size_t k_;
    const std::vector<PatternSpec>& forbidden_;
    std::mt19937_64 rng_;
    std::vector<Color> colors_;
    std::vector<BitGraph> classes_;
};

std::optional<EdgeColoring> run_trajectory(std::size_t n, std::size_t k, const std::vector<PatternSpec>& forbidden,
                                           const LocalSearchOptions& opt, std::uint64_t seed,
                                           const std::atomic<std::uint64_t>& best_seed) {
    Trajectory t(n, k, forbidden, seed);
    t.randomize();
    const std::uint64_t restart_after = opt.restart_after ? opt.restart_after : 20 * (n * (n - 1) / 2);
    std::vector<std::uint64_t> tabu_until(n * n, 0);
    std::vector<Anchor> anchors;
    std::size_t current = t.cost(&anchors);
    std::size_t best_in_restart = current;
    std::uint64_t stale = 0;
    auto& rng = t.rng();

    for (std::uint64_t step = 1;; ++step) {
        if (current == 0) {
            auto g = t.snapshot();
            if (count_violations(g, forbidden) == 0) return g;
        }
        if (step > opt.budget || best_seed.load(std::memory_order_relaxed) < seed) return std::nullopt;
        if (anchors.empty() || stale >= restart_after) {
            t.randomize();
            std::fill(tabu_until.begin(), tabu_until.end(), 0);
            anchors.clear();
            current = best_in_restart = t.cost(&anchors);
            stale = 0;
            continue;
        }

        const auto edges = t.conflict_edges(anchors[rng() % anchors.size()]);
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        std::vector<std::pair<std::pair<Vertex, Vertex>, Color>> best_moves;
        for (auto [u, v] : edges) {
            const Color old = t.color(u, v);
            for (Color c = 0; c < k; ++c) {
                if (c == old) continue;
                t.assign(u, v, c);
                const std::size_t cost = t.cost(nullptr);
                t.assign(u, v, old);
                const bool allowed = tabu_until[u * n + v] <= step || cost < best_in_restart;
                if (!allowed) continue;
                if (cost < best_cost) {
                    best_cost = cost;
                    best_moves.clear();
                }
                if (cost == best_cost) best_moves.push_back({{u, v}, c});
            }
        }
        if (best_moves.empty()) {
            ++stale;
            continue;
        }
        const auto [pair, c] = best_moves[rng() % best_moves.size()];
        t.assign(pair.first, pair.second, c);
        tabu_until[pair.first * n + pair.second] = step + opt.tabu_tenure;
        anchors.clear();
        current = t.cost(&anchors);
        if (current < best_in_restart) {
            best_in_restart = current;
            stale = 0;
        } else {
            ++stale;
        }
    }
}

}  // namespace

std::optional<EdgeColoring> local_search_witness(std::size_t n, std::size_t k, const std::vector<PatternSpec>& forbidden,
                                                 const LocalSearchOptions& options) {
    if (n < 1 || n > kMaxOrder || k < 1) throw Error(ErrorCode::ParameterOutOfRange, "bad order or palette size");
    if (options.budget < 1) throw Error(ErrorCode::ParameterOutOfRange, "budget must be at least 1");
    for (const auto& spec : forbidden)
        if (spec.scope == ScopeKind::InColor && spec.color >= k)
            throw Error(ErrorCode::InvalidColor, to_string(spec) + " names a color outside the palette");

    if (n == 1) {
        auto g = new_uniform(1, 0, k);
        if (count_violations(g, forbidden) == 0) return g;
        return std::nullopt;
    }

    const std::size_t seeds = std::max<std::size_t>(options.seeds, 1);
    std::vector<std::optional<EdgeColoring>> results(seeds);
    std::atomic<std::uint64_t> best_seed{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < seeds;) {
            const std::uint64_t seed = options.seed + i;
            if (best_seed.load() < seed) break;
            results[i] = run_trajectory(n, k, forbidden, options, seed, best_seed);
            if (results[i]) {
                auto cur = best_seed.load();
                while (seed < cur && !best_seed.compare_exchange_weak(cur, seed)) {
                }
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, seeds);
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (auto& r : results)
        if (r) return r;
    return std::nullopt;
}

}  // namespace gallai
