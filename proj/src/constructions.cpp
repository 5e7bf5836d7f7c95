#include "gallai/constructions.hpp"

#include <array>

namespace gallai {

std::string to_string(RecipeKind kind) {
    switch (kind) {
        case RecipeKind::K5Base: return "k5";
        case RecipeKind::Double: return "double";
        case RecipeKind::Blowup5: return "blowup5";
        case RecipeKind::WheelJoin: return "wheel-join";
        case RecipeKind::W5Tower: return "w5-tower";
        case RecipeKind::GeneralGrTower: return "gr-tower";
        case RecipeKind::LocalSearch: return "local-search";
    }
    return "unknown";
}

namespace {

std::size_t pow5(std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= 5;
    return r;
}

void certify(const EdgeColoring& g, const WitnessRecipe& recipe) {
    if (g.order() != recipe.expected_order)
        throw Error(ErrorCode::InternalInconsistency, to_string(recipe.kind) + " built order " +
                                                          std::to_string(g.order()) + ", expected " +
                                                          std::to_string(recipe.expected_order));
    if (count_violations(g, recipe.forbidden) != 0)
        throw Error(ErrorCode::InternalInconsistency, to_string(recipe.kind) + " output contains a forbidden pattern");
}

// Blow-ups for each remaining pair of colors, then one doubling if a color is left.
EdgeColoring tower(EdgeColoring current, std::size_t k) {
    while (current.palette_size() + 2 <= k) current = blowup5(current);
    if (current.palette_size() < k) current = double_coloring(current);
    return current;
}

}  // namespace

std::vector<PatternSpec> wheel_forbidden(std::size_t m, std::size_t k, bool rainbow) {
    std::vector<PatternSpec> out;
    if (rainbow) out.push_back(PatternSpec::rainbow_triangle());
    for (std::size_t c = 0; c < k; ++c) out.push_back(PatternSpec::in_color(PatternShape::wheel(m), c));
    return out;
}

WitnessRecipe k5_recipe() {
    WitnessRecipe r;
    r.kind = RecipeKind::K5Base;
    r.k = 2;
    r.expected_order = 5;
    r.forbidden = {PatternSpec::any_color(PatternShape::cycle(3))};
    return r;
}

WitnessRecipe wheel_join_recipe(std::size_t n) {
    if (n < 6) throw Error(ErrorCode::ParameterOutOfRange, "wheel join needs wheel order >= 6");
    WitnessRecipe r;
    r.kind = RecipeKind::WheelJoin;
    r.n = n;
    r.k = 2;
    r.expected_order = n % 2 == 0 ? 3 * (n - 1) : 2 * (n - 1);  // 6t+3 resp. 4t
    r.forbidden = wheel_forbidden(n, 2, false);
    return r;
}

WitnessRecipe w5_tower_recipe(std::size_t k) {
    if (k < 2) throw Error(ErrorCode::ParameterOutOfRange, "w5 tower needs k >= 2");
    WitnessRecipe r;
    r.kind = RecipeKind::W5Tower;
    r.n = 5;
    r.k = k;
    r.expected_order = k % 2 == 0 ? 14 * pow5((k - 2) / 2) : 28 * pow5((k - 3) / 2);
    r.forbidden = wheel_forbidden(5, k, true);
    return r;
}

WitnessRecipe general_gr_tower_recipe(std::size_t n, std::size_t k) {
    if (n < 6 || k < 2) throw Error(ErrorCode::ParameterOutOfRange, "general tower needs n >= 6 and k >= 2");
    const std::size_t base = wheel_join_recipe(n).expected_order;
    WitnessRecipe r;
    r.kind = RecipeKind::GeneralGrTower;
    r.n = n;
    r.k = k;
    r.expected_order = k % 2 == 0 ? base * pow5((k - 2) / 2) : 2 * base * pow5((k - 3) / 2);
    r.forbidden = wheel_forbidden(n, k, true);
    return r;
}

EdgeColoring k5_two_coloring() {
    auto g = EdgeColoring::from_function(5, 2, [](Vertex u, Vertex v) {
        const auto d = (v + 5 - u) % 5;
        return (d == 1 || d == 4) ? 0 : 1;
    });
    certify(g, k5_recipe());
    return g;
}

EdgeColoring double_coloring(const EdgeColoring& g) {
    const std::size_t fresh = g.palette_size();
    const std::array<EdgeColoring, 2> parts{g, g};
    auto reduced = new_uniform(2, 0, 1);
    PaletteMap map = PaletteMap::identity(reduced, parts);
    map.joint_palette = fresh + 1;
    map.reduced = {static_cast<Color>(fresh)};
    return substitute(reduced, parts, map);
}

EdgeColoring blowup5(const EdgeColoring& g) {
    const std::size_t fresh = g.palette_size();
    const std::array<EdgeColoring, 5> parts{g, g, g, g, g};
    const auto reduced = k5_two_coloring();
    PaletteMap map = PaletteMap::identity(reduced, parts);
    map.joint_palette = fresh + 2;
    map.reduced = {static_cast<Color>(fresh), static_cast<Color>(fresh + 1)};
    return substitute(reduced, parts, map);
}

EdgeColoring wheel_join_witness(std::size_t n) {
    const auto recipe = wheel_join_recipe(n);
    const std::size_t cliques = n % 2 == 0 ? 3 : 2;
    const std::size_t size = recipe.expected_order / cliques;
    auto g = EdgeColoring::from_function(recipe.expected_order, 2,
                                         [size](Vertex u, Vertex v) { return u / size == v / size ? 1 : 0; });
    certify(g, recipe);
    return g;
}

EdgeColoring w5_tower(std::size_t k, const EdgeColoring& base) {
    const auto recipe = w5_tower_recipe(k);
    if (base.order() != 14 || base.palette_size() != 2)
        throw Error(ErrorCode::InvalidBase, "base must be a 2-coloring of K14");
    const auto base_forbidden = wheel_forbidden(5, 2, false);
    if (count_violations(base, base_forbidden) != 0)
        throw Error(ErrorCode::InvalidBase, "base contains a monochromatic W5");
    auto g = tower(base, k);
    certify(g, recipe);
    return g;
}

TowerWitness general_gr_tower(std::size_t n, std::size_t k) {
    const auto recipe = general_gr_tower_recipe(n, k);
    auto g = tower(wheel_join_witness(n), k);
    certify(g, recipe);
    std::size_t formula = 0;
    const bool even_n = n % 2 == 0;
    if (k % 2 == 0)
        formula = (even_n ? 3 * n - 4 : 2 * n - 3) * pow5((k - 2) / 2);
    else
        formula = (even_n ? 6 * n - 8 : 4 * n - 6) * pow5((k - 3) / 2);
    const std::size_t achieved = g.order();
    return TowerWitness{std::move(g), achieved, formula};
}

}  // namespace gallai
