// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "gallai/bounds.hpp"
#include "gallai/cli.hpp"
#include "gallai/constructions.hpp"
#include "gallai/partition.hpp"
#include "gallai/search.hpp"
#include "oracles.hpp"

using namespace gallai;
namespace fs = std::filesystem;

namespace {

struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;
    std::function<void(Check&)> body;
};

EdgeColoring read_golden(const std::string& name) {
    std::ifstream in(std::string(GALLAI_TEST_DATA_DIR) + "/" + name, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string str(long long v) { return std::to_string(v); }

void ac1(Check& c) {
    const long long w5[] = {5, 15, 29, 71};
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto r = gr_w5(k);
        c.expect(r.is_exact() && static_cast<long long>(r.value()) == w5[k - 1], "gr_w5(" + str(k) + ")");
    }
    const auto r5 = ramsey_wheel(5), r6 = ramsey_wheel(6);
    c.expect(r5.is_exact() && static_cast<long long>(r5.value()) == 15, "ramsey_wheel(5)");
    c.expect(r6.is_exact() && static_cast<long long>(r6.value()) == 17, "ramsey_wheel(6)");
    c.expect(static_cast<long long>(gr_mixed_upper(6, 1, 1, 1).hi) == 2415, "gr_mixed_upper(6,1,1,1)");
}

void ac2(Check& c) {
    struct Case {
        std::size_t m, n, value;
    };
    SearchConfig config;
    config.workers = 4;
    for (const auto& t : {Case{3, 3, 6}, Case{4, 4, 6}, Case{4, 6, 7}, Case{5, 5, 9}}) {
        const std::string name = "R(C" + str(t.m) + ",C" + str(t.n) + ")";
        const std::vector<PatternShape> shapes{PatternShape::cycle(t.m), PatternShape::cycle(t.n)};
        const auto r = compute_ramsey(shapes, t.value, config);
        c.expect(r.resolved && r.value == t.value, name + " value");
        const std::vector<PatternSpec> specs{PatternSpec::in_color(shapes[0], 0), PatternSpec::in_color(shapes[1], 1)};
        c.expect(r.witness && r.witness->order() == t.value - 1 && oracle::violations(*r.witness, specs) == 0 &&
                     count_violations(*r.witness, specs) == 0,
                 name + " witness");
        SearchTask at;
        at.n = t.value;
        at.k = 2;
        at.forbidden = specs;
        c.expect(enumerate_exhaustive(at, config).status == SearchStatus::Exhausted, name + " exhausted");
    }
}

void ac3(Check& c) {
    const auto c5 = compute_gallai_ramsey(PatternShape::cycle(5), 2, 9);
    c.expect(c5.resolved && c5.value == 9, "gr_2(K3:C5)");
    c.expect(static_cast<long long>(gr_odd_cycle(2, 2).value()) == 9, "odd cycle formula");
    const auto w5 = compute_gallai_ramsey(PatternShape::wheel(5), 1, 5);
    c.expect(w5.resolved && w5.value == 5, "gr_1(K3:W5)");
}

void ac4(Check& c) {
    for (std::size_t n = 6; n <= 9; ++n) {
        const std::size_t t = n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2;  // n = 2t+2 or n = 2t+1
        const std::size_t order = n % 2 == 0 ? 6 * t + 3 : 4 * t;
        const auto g = wheel_join_witness(n);
        c.expect(g.order() == order, "wheel join order n=" + str(n));
        c.expect(count_violations(g, wheel_forbidden(n, 2, false)) == 0, "wheel join violations n=" + str(n));
    }
    const auto base = read_golden("base-w5-14.ecg");
    for (std::size_t k = 2; k <= 6; ++k) {
        std::size_t order = k % 2 == 0 ? 14 : 28;
        for (std::size_t e = 0; e < (k % 2 == 0 ? k - 2 : k - 3) / 2; ++e) order *= 5;
        const auto g = w5_tower(k, base);
        c.expect(g.order() == order, "tower order k=" + str(k));
        c.expect(count_violations(g, wheel_forbidden(5, k, true)) == 0, "tower violations k=" + str(k));
    }
}

void ac5(Check& c) {
    const auto base = read_golden("base-w5-14.ecg");
    c.expect(base.order() == 14 && base.palette_size() == 2, "base shape");
    const std::vector<PatternSpec> specs{PatternSpec::in_color(PatternShape::wheel(5), 0),
                                         PatternSpec::in_color(PatternShape::wheel(5), 1)};
    c.expect(count_violations(base, specs) == 0, "base violations");
}

void ac6(Check& c) {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng() % 59, k = 1 + rng() % 5;
        const auto g = oracle::random_gallai(rng, n, k);
        try {
            c.expect(verify_partition(g, find_gallai_partition(g)).valid, "random trial " + str(trial));
        } catch (const Error& e) {
            c.expect(false, "random trial " + str(trial) + ": " + e.what());
        }
    }
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t k = 1; k <= 3; ++k)
            oracle::for_each_gallai_up_to_relabel(n, k, [&](const EdgeColoring& g) {
                const auto p = find_gallai_partition(g);
                c.expect(oracle::has_gallai_partition(g), "oracle finds none");
                c.expect(verify_partition(g, p).valid && oracle::is_gallai_partition(g, p.parts),
                         "sweep n=" + str(n) + " k=" + str(k));
            });
}

void ac7(Check& c) {
    for (std::size_t n = 3; n <= 7; ++n) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        const std::size_t need = (n + 2) / 2;  // ceil((n+1)/2)
        std::size_t tested = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            std::vector<std::size_t> deg(n, 0);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) ++deg[pairs[i].first], ++deg[pairs[i].second];
            if (*std::min_element(deg.begin(), deg.end()) < need) continue;
            BitGraph h(n);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) h.add_edge(pairs[i].first, pairs[i].second);
            ++tested;
            c.expect(is_vertex_pancyclic(h), "n=" + str(n) + " mask=" + str(static_cast<long long>(mask)));
        }
        c.expect(tested > 0, "no graphs at n=" + str(n));
    }
}

void ac8(Check& c) {
    auto both = [](PatternShape a, PatternShape b) {
        return std::vector<PatternSpec>{PatternSpec::in_color(a, 0), PatternSpec::in_color(b, 1)};
    };
    const std::vector<std::vector<PatternSpec>> grid{
        {PatternSpec::rainbow_triangle()},
        both(PatternShape::cycle(3), PatternShape::cycle(3)),
        both(PatternShape::cycle(3), PatternShape::cycle(4)),
        both(PatternShape::cycle(4), PatternShape::cycle(4)),
        both(PatternShape::wheel(4), PatternShape::cycle(3)),
        both(PatternShape::path(3), PatternShape::clique(3)),
        {PatternSpec::any_color(PatternShape::cycle(3))},
        {PatternSpec::any_color(PatternShape::path(3))},
        {PatternSpec::any_color(PatternShape::matching(2))},
        {PatternSpec::rainbow_triangle(), PatternSpec::any_color(PatternShape::cycle(4))},
        {PatternSpec::rainbow_triangle(), PatternSpec::in_color(PatternShape::wheel(5), 0)},
    };
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t g = 0; g < grid.size(); ++g) {
                bool fits = true;
                for (const auto& s : grid[g]) fits = fits && (s.scope != ScopeKind::InColor || s.color < k);
                if (!fits) continue;
                SearchTask t;
                t.n = n;
                t.k = k;
                t.forbidden = grid[g];
                const auto o = enumerate_exhaustive(t);
                const bool naive = oracle::some_coloring_avoids(n, k, grid[g]);
                const std::string where = "n=" + str(n) + " k=" + str(k) + " set=" + str(g);
                c.expect((o.status == SearchStatus::WitnessFound) == naive, where);
                c.expect(o.status != SearchStatus::BudgetExceeded, where + " budget");
                c.expect(!o.witness || oracle::violations(*o.witness, grid[g]) == 0, where + " witness");
            }
}

std::string cli_out(std::vector<std::string> args) {
    std::ostringstream out, err;
    cli::run(args, out, err);
    return out.str();
}

void ac9(Check& c) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 1 + rng() % 40, k = 1 + rng() % 8;
        const auto g = oracle::random_coloring(rng, n, k);
        const auto text = serialize(g);
        const auto back = parse(text);
        if (!(back == g) || serialize(back) != text) {
            c.expect(false, "round trip " + str(trial));
            break;
        }
    }

    const fs::path dir = fs::temp_directory_path() / ("gallai-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto task = (dir / "task.json").string();
    std::ofstream(task) << R"({"n":8,"k":3,"forbidden":["rainbow-K3","C4@any"]})";
    const auto task2 = (dir / "task2.json").string();
    std::ofstream(task2) << R"({"n":9,"k":2,"forbidden":["C5@0","C5@1"]})";

    const std::vector<std::vector<std::string>> commands{
        {"search", task},
        {"search", task2},
        {"witness-search", "8", "2", "--forbid", "C5@0", "--forbid", "C5@1", "--seed", "3", "--seeds", "4"},
        {"witness-search", "10", "2", "--forbid", "K4@any", "--seed", "17", "--seeds", "4"},
    };
    for (const auto& cmd : commands) {
        std::vector<std::string> reports;
        for (const char* w : {"1", "1", "4", "4"}) {
            auto args = cmd;
            args.insert(args.end(), {"--workers", w});
            reports.push_back(cli_out(args));
        }
        bool same = !reports[0].empty();
        for (const auto& r : reports) same = same && r == reports[0];
        c.expect(same, "byte identity: " + cmd[0] + " " + cmd[1]);
    }
    fs::remove_all(dir);
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "formula conformance", 1, ac1},
        {"AC2", "exhaustive small Ramsey numbers", 600, ac2},
        {"AC3", "Gallai-Ramsey cross-check", 600, ac3},
        {"AC4", "construction verification", 300, ac4},
        {"AC5", "base witness", 1, ac5},
        {"AC6", "Gallai partition properties", 600, ac6},
        {"AC7", "vertex pancyclicity at small orders", 300, ac7},
        {"AC8", "oracle equivalence", 120, ac8},
        {"AC9", "round trip and determinism", 120, ac9},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.limit_seconds) check.expect(false, "time limit exceeded");
        const bool ok = check.failures.empty();
        failed += !ok;
        std::printf("%s %s %s (%.3f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.title, secs, cr.limit_seconds);
        for (std::size_t i = 0; i < check.failures.size() && i < 10; ++i)
            std::printf("    %s\n", check.failures[i].c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
