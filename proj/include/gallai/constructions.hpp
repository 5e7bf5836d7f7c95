#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gallai/coloring.hpp"
#include "gallai/pattern.hpp"

namespace gallai {

enum class RecipeKind { K5Base, Double, Blowup5, WheelJoin, W5Tower, GeneralGrTower, LocalSearch };

std::string to_string(RecipeKind kind);

/// What a generator promises: its output order and the patterns it avoids.
struct WitnessRecipe {
    RecipeKind kind = RecipeKind::K5Base;
    std::size_t n = 0;  // wheel order / target order, when applicable
    std::size_t k = 0;  // number of colors
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::size_t expected_order = 0;
    std::vector<PatternSpec> forbidden;
};

/// W_m in each of the k colors, optionally preceded by the rainbow triangle.
std::vector<PatternSpec> wheel_forbidden(std::size_t m, std::size_t k, bool rainbow);

WitnessRecipe k5_recipe();
WitnessRecipe wheel_join_recipe(std::size_t n);
WitnessRecipe w5_tower_recipe(std::size_t k);
WitnessRecipe general_gr_tower_recipe(std::size_t n, std::size_t k);

/// The 2-coloring of K5 with color 0 on the cycle 0-1-2-3-4-0 and color 1 on
/// the complementary cycle.
EdgeColoring k5_two_coloring();

/// Two copies of g joined in the fresh color g.palette_size().
EdgeColoring double_coloring(const EdgeColoring& g);

/// Five copies of g joined as a blow-up of k5_two_coloring in the fresh
/// colors g.palette_size() (cycle) and g.palette_size() + 1 (complement).
EdgeColoring blowup5(const EdgeColoring& g);

/// Lower-bound coloring for R(W_n, W_n). n = 2t+2: three cliques K_{2t+1} in
/// color 1 joined in color 0 (order 6t+3). n = 2t+1: two cliques K_{2t} in
/// color 1 joined in color 0 (order 4t).
EdgeColoring wheel_join_witness(std::size_t n);

/// Colors 0..k-1 without rainbow triangles or monochromatic W5, built from a
/// 14-vertex 2-colored base: blow-ups for each further pair of colors, then a
/// final doubling when k is odd. Throws InvalidBase if the base does not check out.
EdgeColoring w5_tower(std::size_t k, const EdgeColoring& base);

struct TowerWitness {
    EdgeColoring coloring;
    std::size_t achieved_order = 0;
    std::size_t formula_order = 0;  // order the closed-form lower bound quotes
};

/// The same tower over wheel_join_witness(n). The achieved order is reported
/// alongside the formula's order; the two differ.
TowerWitness general_gr_tower(std::size_t n, std::size_t k);

struct LocalSearchOptions {
    std::uint64_t budget = 100000;  // recolor steps per seed
    std::uint64_t seed = 0;
    std::size_t seeds = 1;          // trajectories seed, seed+1, ...; lowest successful seed wins
    std::size_t workers = 1;
    std::size_t tabu_tenure = 7;
    std::uint64_t restart_after = 0;  // non-improving steps; 0 means 20 * C(n, 2)
};

/// Min-conflict tabu search for a k-coloring of K_n avoiding every forbidden
/// pattern. Anything returned has been re-verified with count_violations.
std::optional<EdgeColoring> local_search_witness(std::size_t n, std::size_t k,
                                                 const std::vector<PatternSpec>& forbidden,
                                                 const LocalSearchOptions& options = {});

}  // namespace gallai
