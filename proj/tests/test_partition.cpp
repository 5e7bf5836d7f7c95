#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gallai/constructions.hpp"
#include "gallai/json_io.hpp"
#include "gallai/partition.hpp"
#include "oracles.hpp"

using namespace gallai;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InternalInconsistency;
}

std::vector<std::vector<Vertex>> singletons(std::size_t n) {
    std::vector<std::vector<Vertex>> parts;
    for (Vertex v = 0; v < n; ++v) parts.push_back({v});
    return parts;
}

std::vector<std::vector<Vertex>> blocks(std::size_t count, std::size_t size) {
    std::vector<std::vector<Vertex>> parts(count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < size; ++j) parts[i].push_back(static_cast<Vertex>(i * size + j));
    return parts;
}

// No part pair carries two colors, and the stored colors match g.
void check_structure(const EdgeColoring& g, const GallaiPartition& p) {
    REQUIRE(p.parts.size() >= 2);
    CHECK(p.between_colors.size() <= 2);
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (std::size_t j = i + 1; j < p.parts.size(); ++j)
            for (auto a : p.parts[i])
                for (auto b : p.parts[j]) CHECK(g.color(a, b) == p.pair_colors[i][j]);
}

}  // namespace

TEST_CASE("verify_partition examples") {
    const auto base = k5_two_coloring();
    const auto doubled = double_coloring(base);
    const auto halves = GallaiPartition::from_parts(doubled, blocks(2, 5));
    const auto report = verify_partition(doubled, halves);
    CHECK(report.valid);
    CHECK(halves.between_colors == std::vector<Color>{2});

    std::mt19937_64 rng(1);
    const auto two = oracle::random_coloring(rng, 6, 2);
    CHECK(verify_partition(two, GallaiPartition::from_parts(two, singletons(6))).valid);

    const auto three = recolor(recolor(new_uniform(4, 0, 3), 0, 1, 1), 2, 3, 2);
    const auto bad = verify_partition(three, GallaiPartition::from_parts(three, singletons(4)));
    CHECK_FALSE(bad.valid);
    CHECK(bad.violation == PartitionViolation::TooManyBetweenColors);

    const auto trivial = verify_partition(three, GallaiPartition::from_parts(three, {{0, 1, 2, 3}}));
    CHECK_FALSE(trivial.valid);
    CHECK(trivial.violation == PartitionViolation::Trivial);

    // a cross edge that disagrees with its part pair
    const auto mixed = recolor(doubled, 0, 9, 0);
    auto p = halves;
    const auto cross = verify_partition(mixed, p);
    CHECK_FALSE(cross.valid);
    CHECK(cross.violation == PartitionViolation::CrossEdgeColor);
    REQUIRE(cross.edge);
    CHECK(*cross.edge == std::pair<Vertex, Vertex>{0, 9});

    p.between_colors = {0};
    const auto missing = verify_partition(doubled, p);
    CHECK_FALSE(missing.valid);
    CHECK(missing.violation == PartitionViolation::PairColorNotBetween);
}

TEST_CASE("malformed partitions") {
    const auto g = new_uniform(4, 0, 2);
    auto p = GallaiPartition::from_parts(g, singletons(4));
    auto overlap = p;
    overlap.parts[1] = {0};
    CHECK(code_of([&] { verify_partition(g, overlap); }) == ErrorCode::MalformedPartition);
    auto gap = p;
    gap.parts.pop_back();
    gap.pair_colors.pop_back();
    for (auto& row : gap.pair_colors) row.pop_back();
    CHECK(code_of([&] { verify_partition(g, gap); }) == ErrorCode::MalformedPartition);
    auto empty = p;
    empty.parts[0].clear();
    CHECK(code_of([&] { verify_partition(g, empty); }) == ErrorCode::MalformedPartition);
    auto shape = p;
    shape.pair_colors.pop_back();
    CHECK(code_of([&] { verify_partition(g, shape); }) == ErrorCode::MalformedPartition);
}

TEST_CASE("find_gallai_partition examples") {
    const auto tri = EdgeColoring::from_function(3, 3, [](Vertex u, Vertex v) { return u + v - 1; });
    CHECK(code_of([&] { find_gallai_partition(tri); }) == ErrorCode::NotGallai);
    CHECK(code_of([] { find_gallai_partition(new_uniform(1, 0, 1)); }) == ErrorCode::OrderTooSmall);

    std::mt19937_64 rng(4);
    const auto inner = oracle::random_gallai(rng, 4, 3);
    const auto blown = blowup5(inner);
    const auto p = find_gallai_partition(blown);
    CHECK(p.parts == blocks(5, 4));
    CHECK(p.between_colors == std::vector<Color>{3, 4});
    CHECK(verify_partition(blown, p).valid);

    oracle::for_each_coloring(4, 2, [&](const EdgeColoring& g) {
        const auto q = find_gallai_partition(g);
        CHECK(verify_partition(g, q).valid);
        return false;
    });
}

TEST_CASE("random recursive-substitution colorings") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng() % 59, k = 1 + rng() % 5;
        const auto g = oracle::random_gallai(rng, n, k);
        REQUIRE_FALSE(oracle::has_rainbow(g));
        const auto p = find_gallai_partition(g);
        CHECK(verify_partition(g, p).valid);
        check_structure(g, p);
    }
}

TEST_CASE("exhaustive agreement with the set-partition oracle") {
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t k = 1; k <= 4; ++k) {
            std::size_t seen = 0;
            oracle::for_each_gallai_up_to_relabel(n, k, [&](const EdgeColoring& g) {
                ++seen;
                const bool exists = oracle::has_gallai_partition(g);
                CHECK(exists);
                const auto p = find_gallai_partition(g);
                CHECK(verify_partition(g, p).valid);
                CHECK(oracle::is_gallai_partition(g, p.parts));
            });
            CHECK(seen > 0);
        }
}

TEST_CASE("reduced graph") {
    const auto base = k5_two_coloring();
    const auto doubled = double_coloring(base);
    const auto r = reduced_graph(doubled, GallaiPartition::from_parts(doubled, blocks(2, 5)));
    CHECK(r.coloring == new_uniform(2, 0, 1));
    CHECK(r.palette == std::vector<Color>{2});

    std::mt19937_64 rng(6);
    const auto blown = blowup5(oracle::random_gallai(rng, 3, 2));
    const auto rb = reduced_graph(blown, find_gallai_partition(blown));
    CHECK(rb.palette == std::vector<Color>{2, 3});
    CHECK(rb.coloring == k5_two_coloring());

    const auto two = recolor(recolor(oracle::random_coloring(rng, 7, 2), 0, 1, 0), 0, 2, 1);
    const auto id = reduced_graph(two, GallaiPartition::from_parts(two, singletons(7)));
    CHECK(id.palette == std::vector<Color>{0, 1});
    CHECK(id.coloring == two);

    const auto three = recolor(recolor(new_uniform(4, 0, 3), 0, 1, 1), 2, 3, 2);
    CHECK(code_of([&] { reduced_graph(three, GallaiPartition::from_parts(three, singletons(4))); }) ==
          ErrorCode::InvalidPartition);
}

TEST_CASE("substitution round trip") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 30, k = 1 + rng() % 4;
        const auto g = oracle::random_gallai(rng, n, k);
        const auto p = find_gallai_partition(g);
        const auto r = reduced_graph(g, p);
        std::vector<EdgeColoring> parts;
        std::vector<Vertex> order;
        for (const auto& part : p.parts) {
            const auto sub = g.induced(part);
            parts.push_back(EdgeColoring::from_function(sub.order(), k, [&](Vertex u, Vertex v) { return sub.color(u, v); }));
            order.insert(order.end(), part.begin(), part.end());
        }
        PaletteMap map{k, r.palette, {}};
        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::vector<Color> id(k);
            std::iota(id.begin(), id.end(), Color{0});
            map.parts.push_back(id);
        }
        // substitute labels part by part; compare through the same relabeling
        CHECK(substitute(r.coloring, parts, map) == g.induced(order));
    }
}

TEST_CASE("partition json") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = oracle::random_gallai(rng, 2 + rng() % 20, 1 + rng() % 4);
        const auto p = find_gallai_partition(g);
        const auto j = partition_to_json(p);
        CHECK(partition_from_json(g, j) == p);
        Json bare{{"parts", j["parts"]}};
        CHECK(partition_from_json(g, bare) == p);
    }
}
