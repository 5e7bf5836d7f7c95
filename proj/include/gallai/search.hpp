#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gallai/coloring.hpp"
#include "gallai/pattern.hpp"

namespace gallai {

/// Largest order the exhaustive search accepts (one machine word per row).
inline constexpr std::size_t kMaxSearchOrder = 64;

/// Does some k-coloring of K_n avoid every forbidden pattern?
struct SearchTask {
    std::size_t n = 1;
    std::size_t k = 1;
    std::vector<PatternSpec> forbidden;
    std::optional<std::uint64_t> node_budget;
    std::optional<double> time_budget_seconds;
};

struct SearchConfig {
    std::size_t workers = 1;
    bool canonicity = true;
    std::size_t canonicity_threshold = 8;  // largest prefix checked for lex-minimality
    std::size_t split_depth = 6;           // prefix order at which work is handed to workers
};

enum class SearchStatus { Exhausted, WitnessFound, BudgetExceeded };

const char* to_string(SearchStatus status);

struct SearchStats {
    std::uint64_t nodes = 0;  // completed vertex prefixes examined
    std::uint64_t pattern_prunes = 0;
    std::uint64_t canonicity_prunes = 0;
    double elapsed_seconds = 0.0;

    SearchStats& operator+=(const SearchStats& other);
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<EdgeColoring> witness;  // present iff WitnessFound
    SearchStats stats;
};

/// Throws on malformed tasks (empty forbidden list, order above kMaxSearchOrder,
/// out-of-palette colors).
void validate(const SearchTask& task);

/// Exhaustive vertex-by-vertex extension with pattern and canonicity pruning.
///
/// The witness, when one exists, is the first avoiding coloring in
/// depth-first order (pairs {u, v} assigned with u ascending, colors
/// ascending), so it does not depend on the worker count. Counters are summed
/// as the sequential search would have seen them; elapsed time is not.
SearchOutcome enumerate_exhaustive(const SearchTask& task, const SearchConfig& config = {});

struct SearchLimits {
    std::optional<std::uint64_t> node_budget;
    std::optional<double> time_budget_seconds;
};

/// Least order at which a family of avoidance tasks becomes unsatisfiable.
struct LeastOrder {
    bool resolved = false;
    std::size_t value = 0;           // valid when resolved
    std::size_t lo = 1;              // proven lower bound
    std::optional<std::size_t> hi;   // proven upper bound, if any
    std::optional<EdgeColoring> witness;  // avoiding coloring of order value - 1 (or lo - 1)
    std::optional<SearchStats> stats_at_value;
    std::vector<std::pair<std::size_t, SearchStatus>> probes;
};

/// R(shape_0, shape_1, ...): shape i forbidden in color i.
LeastOrder compute_ramsey(const std::vector<PatternShape>& per_color, std::size_t n_start,
                          const SearchConfig& config = {}, const SearchLimits& limits = {});

/// gr_k(K3 : shape).
LeastOrder compute_gallai_ramsey(const PatternShape& shape, std::size_t k, std::size_t n_start,
                                 const SearchConfig& config = {}, const SearchLimits& limits = {});

}  // namespace gallai
