#include "gallai/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

namespace gallai {

const char* to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::WitnessFound: return "witness-found";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

SearchStats& SearchStats::operator+=(const SearchStats& other) {
    nodes += other.nodes;
    pattern_prunes += other.pattern_prunes;
    canonicity_prunes += other.canonicity_prunes;
    return *this;
}

void validate(const SearchTask& task) {
    if (task.n < 1 || task.n > kMaxSearchOrder)
        throw Error(ErrorCode::ParameterOutOfRange, "search order must be in 1.." + std::to_string(kMaxSearchOrder));
    if (task.k < 1 || task.k > kMaxPalette) throw Error(ErrorCode::ParameterOutOfRange, "palette size must be positive");
    if (task.forbidden.empty()) throw Error(ErrorCode::ParameterOutOfRange, "forbidden list is empty");
    for (const auto& spec : task.forbidden)
        if (spec.scope == ScopeKind::InColor && spec.color >= task.k)
            throw Error(ErrorCode::InvalidColor, "forbidden pattern " + to_string(spec) + " is outside the palette");
}

namespace {

using Clock = std::chrono::steady_clock;

/// Palette permutations that map the forbidden list onto itself: colors are
/// interchangeable when they carry the same multiset of InColor shapes.
std::vector<std::vector<Color>> palette_symmetries(const SearchTask& task) {
    std::vector<std::vector<PatternShape>> signature(task.k);
    for (const auto& spec : task.forbidden)
        if (spec.scope == ScopeKind::InColor) signature[spec.color].push_back(spec.shape);
    for (auto& s : signature) std::sort(s.begin(), s.end());

    std::vector<std::vector<Color>> groups;
    std::vector<bool> placed(task.k, false);
    for (std::size_t c = 0; c < task.k; ++c) {
        if (placed[c]) continue;
        std::vector<Color> group;
        for (std::size_t d = c; d < task.k; ++d)
            if (!placed[d] && signature[d] == signature[c]) {
                placed[d] = true;
                group.push_back(static_cast<Color>(d));
            }
        groups.push_back(std::move(group));
    }

    std::vector<std::vector<Color>> perms{std::vector<Color>(task.k)};
    std::iota(perms[0].begin(), perms[0].end(), Color{0});
    for (const auto& group : groups) {
        if (group.size() < 2) continue;
        std::vector<std::vector<Color>> next;
        auto images = group;
        do {
            for (const auto& base : perms) {
                auto p = base;
                for (std::size_t i = 0; i < group.size(); ++i) p[group[i]] = images[i];
                next.push_back(std::move(p));
            }
        } while (std::next_permutation(images.begin(), images.end()));
        perms = std::move(next);
    }
    return perms;
}

/// Run-wide state shared by every engine working on one task.
struct Shared {
    const SearchTask& task;
    const SearchConfig& config;
    std::vector<std::vector<Color>> palette_perms;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::optional<Clock::time_point> deadline;
    // Lowest frontier index whose subtree produced a witness.
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

    Shared(const SearchTask& t, const SearchConfig& c, std::vector<std::vector<Color>> perms)
        : task(t), config(c), palette_perms(std::move(perms)) {}
};

struct FrontierNode {
    std::vector<Color> matrix;  // split_depth x split_depth prefix
    SearchStats before;         // frontier-phase counters up to and including this node
};

class Engine {
public:
    Engine(Shared& shared, std::size_t split)
        : s_(shared), n_(shared.task.n), k_(shared.task.k), split_(split),
          m_(n_ * n_, 0), cls_(k_, BitGraph(n_)) {
        for (const auto& spec : s_.task.forbidden) {
            if (spec.scope == ScopeKind::RainbowTriangle) {
                rainbow_ = k_ >= 3;
            } else {
                mono_.push_back(spec);
            }
        }
    }

    /// Depth-first search from the empty prefix; stops at the split depth
    /// when one is set, recording the frontier.
    bool run_from_root() { return add_vertex(0); }

    /// Depth-first search below a recorded frontier node.
    bool run_from(const FrontierNode& node, std::size_t index) {
        index_ = index;
        for (Vertex v = 1; v < split_; ++v)
            for (Vertex u = 0; u < v; ++u) set(u, v, node.matrix[u * split_ + v]);
        return add_vertex(static_cast<Vertex>(split_));
    }

    const SearchStats& stats() const { return stats_; }
    std::vector<FrontierNode>& frontier() { return frontier_; }
    bool aborted() const { return aborted_; }

    EdgeColoring witness() const {
        return EdgeColoring::from_function(n_, k_, [&](Vertex u, Vertex v) { return m_[u * n_ + v]; });
    }

private:
    void set(Vertex u, Vertex v, Color c) {
        m_[u * n_ + v] = m_[v * n_ + u] = c;
        cls_[c].add_edge(u, v);
    }
    void unset(Vertex u, Vertex v) { cls_[m_[u * n_ + v]].remove_edge(u, v); }
    Color at(Vertex u, Vertex v) const { return m_[u * n_ + v]; }

    bool should_stop() {
        if (s_.out_of_budget.load(std::memory_order_relaxed)) return true;
        if (index_ != kNoIndex && s_.best.load(std::memory_order_relaxed) < index_) return true;
        const auto total = s_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (s_.task.node_budget && total > *s_.task.node_budget) {
            s_.out_of_budget = true;
            return true;
        }
        if (s_.deadline && (total & 255) == 0 && Clock::now() > *s_.deadline) {
            s_.out_of_budget = true;
            return true;
        }
        return false;
    }

    bool add_vertex(Vertex v) {
        if (v == n_) return true;
        return assign(v, 0);
    }

    // Colors pair {u, v}, then the pairs {u+1, v}, ... in turn.
    bool assign(Vertex v, Vertex u) {
        if (u == v) return complete(v);
        for (std::size_t c = 0; c < k_; ++c) {
            set(u, v, static_cast<Color>(c));
            if (rainbow_ && closes_rainbow(u, v)) {
                ++stats_.pattern_prunes;
            } else if (assign(v, u + 1)) {
                return true;
            }
            unset(u, v);
            if (aborted_) return false;
        }
        return false;
    }

    // Triangles {w, u, v} with w < u are fully colored once {u, v} is.
    bool closes_rainbow(Vertex u, Vertex v) const {
        const Color a = at(u, v);
        for (Vertex w = 0; w < u; ++w) {
            const Color b = at(w, v), c = at(w, u);
            if (a != b && b != c && a != c) return true;
        }
        return false;
    }

    bool complete(Vertex v) {
        if (should_stop()) {
            aborted_ = true;
            return false;
        }
        ++stats_.nodes;
        if (has_forbidden_through(v)) {
            ++stats_.pattern_prunes;
            return false;
        }
        const std::size_t size = v + 1;
        if (s_.config.canonicity && size <= s_.config.canonicity_threshold && !is_canonical(size)) {
            ++stats_.canonicity_prunes;
            return false;
        }
        if (split_ != 0 && index_ == kNoIndex && size == split_ && size < n_) {
            FrontierNode node{std::vector<Color>(split_ * split_), stats_};
            for (Vertex a = 0; a < split_; ++a)
                for (Vertex b = 0; b < split_; ++b) node.matrix[a * split_ + b] = at(a, b);
            frontier_.push_back(std::move(node));
            return false;
        }
        return add_vertex(v + 1);
    }

    // The prefix before v was clean, so any new copy must use v.
    bool has_forbidden_through(Vertex v) const {
        const std::size_t size = v + 1;
        for (const auto& spec : mono_) {
            if (spec.shape.order() > size) continue;
            const auto through = supports_through(spec.shape.kind) ? std::optional<Vertex>(v) : std::nullopt;
            if (spec.scope == ScopeKind::InColor) {
                if (find_shape(cls_[spec.color], spec.shape, through)) return true;
            } else {
                for (std::size_t c = 0; c < k_; ++c)
                    if (find_shape(cls_[c], spec.shape, through)) return true;
            }
        }
        return false;
    }

    // Lex order on the prefix matrix reads columns left to right, each column
    // top to bottom: (0,1), (0,2), (1,2), (0,3), ...
    bool is_canonical(std::size_t size) {
        perm_.assign(size, 0);
        used_.assign(size, false);
        for (const auto& sigma : s_.palette_perms) {
            sigma_ = &sigma;
            if (smaller_exists(0, size)) return false;
        }
        return true;
    }

    // True if some completion of perm_[0..j) yields a strictly smaller matrix.
    bool smaller_exists(std::size_t j, std::size_t size) {
        if (j == size) return false;
        const auto& sigma = *sigma_;
        for (Vertex x = 0; x < size; ++x) {
            if (used_[x]) continue;
            int cmp = 0;
            for (std::size_t i = 0; i < j && cmp == 0; ++i) {
                const Color mine = sigma[at(perm_[i], x)];
                const Color base = at(static_cast<Vertex>(i), static_cast<Vertex>(j));
                cmp = mine < base ? -1 : (mine > base ? 1 : 0);
            }
            if (cmp < 0) return true;
            if (cmp > 0) continue;
            perm_[j] = x;
            used_[x] = true;
            const bool found = smaller_exists(j + 1, size);
            used_[x] = false;
            if (found) return true;
        }
        return false;
    }

    static constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

    Shared& s_;
    std::size_t n_, k_, split_;
    std::size_t index_ = kNoIndex;
    std::vector<Color> m_;
    std::vector<BitGraph> cls_;
    std::vector<PatternSpec> mono_;
    bool rainbow_ = false;
    bool aborted_ = false;
    SearchStats stats_;
    std::vector<FrontierNode> frontier_;
    std::vector<Vertex> perm_;
    std::vector<bool> used_;
    const std::vector<Color>* sigma_ = nullptr;
};

SearchOutcome certified(const SearchTask& task, EdgeColoring witness, const SearchStats& stats) {
    if (count_violations(witness, task.forbidden) != 0)
        throw Error(ErrorCode::InternalInconsistency, "search produced a coloring that contains a forbidden pattern");
    return SearchOutcome{SearchStatus::WitnessFound, std::move(witness), stats};
}

struct SubtreeResult {
    SearchStats stats;
    std::optional<EdgeColoring> witness;
};

}  // namespace

SearchOutcome enumerate_exhaustive(const SearchTask& task, const SearchConfig& config) {
    validate(task);
    const auto start = Clock::now();
    Shared shared{task, config, palette_symmetries(task)};
    if (task.time_budget_seconds)
        shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(*task.time_budget_seconds));
    auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

    const std::size_t split = config.split_depth >= 1 && config.split_depth < task.n ? config.split_depth : 0;

    Engine root(shared, split);
    const bool found_at_root = root.run_from_root();
    SearchStats stats = root.stats();
    if (shared.out_of_budget) {
        stats.elapsed_seconds = elapsed();
        return SearchOutcome{SearchStatus::BudgetExceeded, std::nullopt, stats};
    }
    if (found_at_root) {
        stats.elapsed_seconds = elapsed();
        return certified(task, root.witness(), stats);
    }
    if (split == 0) {
        stats.elapsed_seconds = elapsed();
        return SearchOutcome{SearchStatus::Exhausted, std::nullopt, stats};
    }

    const auto& frontier = root.frontier();
    std::vector<SubtreeResult> results(frontier.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= frontier.size() || i > shared.best.load() || shared.out_of_budget) return;
            Engine engine(shared, split);
            if (engine.run_from(frontier[i], i)) {
                results[i].witness = engine.witness();
                std::size_t cur = shared.best.load();
                while (i < cur && !shared.best.compare_exchange_weak(cur, i)) {
                }
            }
            results[i].stats = engine.stats();
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, config.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    const std::size_t best = shared.best.load();
    if (best < frontier.size()) {
        SearchStats total = frontier[best].before;
        for (std::size_t i = 0; i <= best; ++i) total += results[i].stats;
        total.elapsed_seconds = elapsed();
        return certified(task, std::move(*results[best].witness), total);
    }
    for (const auto& r : results) stats += r.stats;
    stats.elapsed_seconds = elapsed();
    if (shared.out_of_budget) return SearchOutcome{SearchStatus::BudgetExceeded, std::nullopt, stats};
    return SearchOutcome{SearchStatus::Exhausted, std::nullopt, stats};
}

namespace {

template <typename MakeTask>
LeastOrder least_order(MakeTask make_task, std::size_t n_start, const SearchConfig& config) {
    LeastOrder result;
    std::map<std::size_t, SearchOutcome> seen;
    auto probe = [&](std::size_t n) -> const SearchOutcome& {
        auto it = seen.find(n);
        if (it == seen.end()) {
            it = seen.emplace(n, enumerate_exhaustive(make_task(n), config)).first;
            result.probes.emplace_back(n, it->second.status);
        }
        return it->second;
    };
    auto resolve = [&](std::size_t value) {
        result.resolved = true;
        result.value = result.lo = value;
        result.hi = value;
        result.stats_at_value = seen.at(value).stats;
        if (value > 1) {
            const auto& below = probe(value - 1);
            if (below.status != SearchStatus::WitnessFound)
                throw Error(ErrorCode::InternalInconsistency, "least order lacks a witness one below");
            result.witness = below.witness;
        }
        return result;
    };

    std::size_t n = std::clamp<std::size_t>(n_start, 1, kMaxSearchOrder);
    const auto first = probe(n).status;
    if (first == SearchStatus::Exhausted) {
        while (n > 1) {
            const auto status = probe(n - 1).status;
            if (status == SearchStatus::WitnessFound) return resolve(n);
            if (status == SearchStatus::BudgetExceeded) {
                result.hi = n;
                return result;
            }
            --n;
        }
        return resolve(1);
    }
    if (first == SearchStatus::BudgetExceeded) {
        if (n > 1) {
            const auto& below = probe(n - 1);
            if (below.status == SearchStatus::WitnessFound) {
                result.lo = n;
                result.witness = below.witness;
            }
        }
        return result;
    }
    for (;;) {
        result.lo = n + 1;
        result.witness = seen.at(n).witness;
        if (n + 1 > kMaxSearchOrder) return result;
        const auto status = probe(n + 1).status;
        if (status == SearchStatus::Exhausted) return resolve(n + 1);
        if (status == SearchStatus::BudgetExceeded) return result;
        ++n;
    }
}

SearchTask with_limits(SearchTask task, const SearchLimits& limits) {
    task.node_budget = limits.node_budget;
    task.time_budget_seconds = limits.time_budget_seconds;
    return task;
}

}  // namespace

LeastOrder compute_ramsey(const std::vector<PatternShape>& per_color, std::size_t n_start,
                          const SearchConfig& config, const SearchLimits& limits) {
    if (per_color.empty()) throw Error(ErrorCode::ParameterOutOfRange, "at least one color is required");
    return least_order(
        [&](std::size_t n) {
            SearchTask task;
            task.n = n;
            task.k = per_color.size();
            for (std::size_t c = 0; c < per_color.size(); ++c)
                task.forbidden.push_back(PatternSpec::in_color(per_color[c], c));
            return with_limits(std::move(task), limits);
        },
        n_start, config);
}

LeastOrder compute_gallai_ramsey(const PatternShape& shape, std::size_t k, std::size_t n_start,
                                 const SearchConfig& config, const SearchLimits& limits) {
    if (k < 1) throw Error(ErrorCode::ParameterOutOfRange, "at least one color is required");
    return least_order(
        [&](std::size_t n) {
            SearchTask task;
            task.n = n;
            task.k = k;
            task.forbidden.push_back(PatternSpec::rainbow_triangle());
            for (std::size_t c = 0; c < k; ++c) task.forbidden.push_back(PatternSpec::in_color(shape, c));
            return with_limits(std::move(task), limits);
        },
        n_start, config);
}

}  // namespace gallai
