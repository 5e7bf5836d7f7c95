#include "gallai/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "gallai/bounds.hpp"
#include "gallai/constructions.hpp"
#include "gallai/json_io.hpp"
#include "gallai/partition.hpp"
#include "gallai/pattern.hpp"
#include "gallai/search.hpp"

#ifndef GALLAI_DEFAULT_DATA_DIR
#define GALLAI_DEFAULT_DATA_DIR "data"
#endif

namespace gallai::cli {

namespace {

struct Outcome {
    Json result;
    int exit_code = kOk;
};

std::string data_dir() {
    if (const char* env = std::getenv("GALLAI_DATA_DIR"); env && *env) return env;
    return GALLAI_DEFAULT_DATA_DIR;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error(ErrorCode::Parse, "cannot write " + path);
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::Parse, path + ": " + e.what());
    }
}

// "ecg" text, or its JSON mirror when the document starts with '{'.
EdgeColoring load_coloring(const std::string& path) {
    const auto text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return coloring_from_json(Json::parse(text));
        } catch (const Json::exception& e) {
            throw Error(ErrorCode::Parse, path + ": " + e.what());
        }
    }
    return parse(text);
}

// Writes the coloring to `path` when given, otherwise embeds it in the result.
void emit_coloring(Json& result, const EdgeColoring& g, const std::string& path) {
    result["order"] = g.order();
    result["palette"] = g.palette_size();
    if (path.empty()) {
        result["ecg"] = serialize(g);
    } else {
        write_file(path, serialize(g));
        result["output"] = path;
    }
}

std::vector<PatternSpec> parse_patterns(const std::vector<std::string>& texts) {
    std::vector<PatternSpec> specs;
    for (const auto& t : texts) specs.push_back(parse_pattern(t));
    return specs;
}

Json violations_json(const EdgeColoring& g, const std::vector<PatternSpec>& forbidden, std::size_t& count) {
    Json list = Json::array();
    count = 0;
    for (const auto& spec : forbidden) {
        std::optional<PatternHit> hit;
        if (spec.scope == ScopeKind::RainbowTriangle) {
            hit = has_rainbow_triangle(g);
        } else if (spec.order() <= g.order()) {
            hit = find_mono(g, spec);
        }
        Json entry{{"pattern", to_string(spec)}, {"present", hit.has_value()}};
        if (hit) {
            if (!validate_hit(g, *hit)) throw Error(ErrorCode::InternalInconsistency, "detector returned an invalid hit");
            entry["hit"] = hit_to_json(*hit);
            ++count;
        }
        list.push_back(std::move(entry));
    }
    return list;
}

struct Options {
    // construct
    std::string recipe, input, base, output;
    std::size_t n = 0, k = 0;
    // verify / partition / reduce
    std::string file, part_file, verify_file;
    std::vector<std::string> forbid;
    // bounds
    std::string formula;
    std::optional<std::size_t> b_n, b_m, b_k, b_l, b_r, b_s, b_t;
    // search
    std::string task_file;
    std::size_t workers = 1;
    std::optional<std::uint64_t> budget;
    std::optional<double> seconds;
    std::size_t split = SearchConfig{}.split_depth;
    std::size_t threshold = SearchConfig{}.canonicity_threshold;
    bool no_canonicity = false;
    bool timing = false;
    // witness-search
    std::uint64_t seed = 0;
    std::uint64_t steps = LocalSearchOptions{}.budget;
    std::size_t seeds = 1;
};

Outcome do_construct(const Options& o, Json& params) {
    params["recipe"] = o.recipe;
    Json result{{"recipe", o.recipe}};
    std::optional<EdgeColoring> g;
    std::optional<WitnessRecipe> recipe;
    auto need = [&](std::size_t v, const char* name) {
        if (v == 0) throw Error(ErrorCode::ParameterOutOfRange, std::string("recipe ") + o.recipe + " needs --" + name);
        params[name] = v;
        return v;
    };
    if (o.recipe == "k5") {
        recipe = k5_recipe();
        g = k5_two_coloring();
    } else if (o.recipe == "double" || o.recipe == "blowup5") {
        if (o.input.empty()) throw Error(ErrorCode::ParameterOutOfRange, "recipe " + o.recipe + " needs --input");
        params["input"] = o.input;
        const auto in = load_coloring(o.input);
        g = o.recipe == "double" ? double_coloring(in) : blowup5(in);
    } else if (o.recipe == "wheel-join") {
        recipe = wheel_join_recipe(need(o.n, "n"));
        g = wheel_join_witness(o.n);
    } else if (o.recipe == "w5-tower") {
        recipe = w5_tower_recipe(need(o.k, "k"));
        const std::string base = o.base.empty() ? data_dir() + "/base-w5-14.ecg" : o.base;
        params["base"] = o.base.empty() ? Json("base-w5-14.ecg") : Json(o.base);
        g = w5_tower(o.k, load_coloring(base));
    } else if (o.recipe == "gr-tower") {
        recipe = general_gr_tower_recipe(need(o.n, "n"), need(o.k, "k"));
        auto tower = general_gr_tower(o.n, o.k);
        result["achieved_order"] = tower.achieved_order;
        result["formula_order"] = tower.formula_order;
        g = std::move(tower.coloring);
    } else {
        throw Error(ErrorCode::ParameterOutOfRange, "unknown recipe '" + o.recipe + "'");
    }
    if (recipe) {
        result["expected_order"] = recipe->expected_order;
        std::size_t count = 0;
        result["checks"] = violations_json(*g, recipe->forbidden, count);
        result["violations"] = count;
        if (count != 0) throw Error(ErrorCode::InternalInconsistency, "construction failed its own check");
    }
    if (!o.output.empty()) params["output"] = o.output;
    emit_coloring(result, *g, o.output);
    return {std::move(result), kOk};
}

Outcome do_verify(const Options& o, Json& params) {
    params["file"] = o.file;
    params["forbid"] = o.forbid;
    const auto g = load_coloring(o.file);
    const auto forbidden = parse_patterns(o.forbid);
    std::size_t count = 0;
    Json result{{"order", g.order()}, {"palette", g.palette_size()}};
    result["checks"] = violations_json(g, forbidden, count);
    result["violations"] = count;
    if (count != count_violations(g, forbidden))
        throw Error(ErrorCode::InternalInconsistency, "violation counts disagree");
    return {std::move(result), count == 0 ? kOk : kViolated};
}

Outcome do_partition(const Options& o, Json& params) {
    params["file"] = o.file;
    const auto g = load_coloring(o.file);
    if (!o.verify_file.empty()) {
        params["verify"] = o.verify_file;
        const auto p = partition_from_json(g, read_json(o.verify_file));
        const auto report = verify_partition(g, p);
        return {Json{{"report", report_to_json(report)}}, report.valid ? kOk : kViolated};
    }
    if (auto rainbow = has_rainbow_triangle(g))
        return {Json{{"gallai", false}, {"rainbow_triangle", hit_to_json(*rainbow)}}, kViolated};
    const auto p = find_gallai_partition(g);
    return {Json{{"gallai", true}, {"partition", partition_to_json(p)}}, kOk};
}

Outcome do_reduce(const Options& o, Json& params) {
    params["file"] = o.file;
    params["partition"] = o.part_file;
    const auto g = load_coloring(o.file);
    const auto p = partition_from_json(g, read_json(o.part_file));
    const auto report = verify_partition(g, p);
    if (!report.valid) return {Json{{"report", report_to_json(report)}}, kViolated};
    const auto reduced = reduced_graph(g, p);
    Json result{{"palette_map", reduced.palette}};
    if (!o.output.empty()) params["output"] = o.output;
    emit_coloring(result, reduced.coloring, o.output);
    return {std::move(result), kOk};
}

Outcome do_bounds(const Options& o, Json& params) {
    params["formula"] = o.formula;
    auto need = [&](const std::optional<std::size_t>& v, const char* name) {
        if (!v) throw Error(ErrorCode::ParameterOutOfRange, "bounds " + o.formula + " needs --" + name);
        params[name] = *v;
        return *v;
    };
    BoundResult r;
    if (o.formula == "ramsey-cycle") {
        r = ramsey_cycle(need(o.b_m, "m"), need(o.b_n, "n"));
    } else if (o.formula == "ramsey-wheel") {
        r = ramsey_wheel(need(o.b_n, "n"));
    } else if (o.formula == "gr-w5") {
        r = gr_w5(need(o.b_k, "k"));
    } else if (o.formula == "gr-wheel") {
        r = gr_wheel_bounds(need(o.b_n, "n"), need(o.b_k, "k"));
    } else if (o.formula == "gr-mixed") {
        r = gr_mixed_upper(need(o.b_n, "n"), need(o.b_r, "r"), need(o.b_s, "s"), need(o.b_t, "t"));
    } else if (o.formula == "gr-odd-cycle") {
        r = gr_odd_cycle(need(o.b_l, "l"), need(o.b_k, "k"));
    } else if (o.formula == "gr-fan") {
        r = gr_fan(need(o.b_n, "n"), need(o.b_k, "k"));
    } else {
        throw Error(ErrorCode::ParameterOutOfRange, "unknown formula '" + o.formula + "'");
    }
    return {bound_to_json(r), kOk};
}

Outcome do_search(const Options& o, Json& params) {
    auto task = task_from_json(read_json(o.task_file));
    if (o.budget) task.node_budget = *o.budget;
    if (o.seconds) task.time_budget_seconds = *o.seconds;
    SearchConfig config;
    config.workers = std::max<std::size_t>(1, o.workers);
    config.canonicity = !o.no_canonicity;
    config.canonicity_threshold = o.threshold;
    config.split_depth = o.split;
    // Worker count is an execution detail and stays out of the echo.
    params["task"] = task_to_json(task);
    params["canonicity"] = config.canonicity;
    params["canonicity_threshold"] = config.canonicity_threshold;
    params["split_depth"] = config.split_depth;
    const auto outcome = enumerate_exhaustive(task, config);
    Json result = outcome_to_json(outcome, o.timing);
    if (outcome.witness && !o.output.empty()) {
        params["output"] = o.output;
        write_file(o.output, serialize(*outcome.witness));
    }
    return {std::move(result), outcome.status == SearchStatus::BudgetExceeded ? kBudget : kOk};
}

Outcome do_witness_search(const Options& o, Json& params) {
    const auto forbidden = parse_patterns(o.forbid);
    LocalSearchOptions ls;
    ls.seed = o.seed;
    ls.budget = o.steps;
    ls.seeds = std::max<std::size_t>(1, o.seeds);
    ls.workers = std::max<std::size_t>(1, o.workers);
    params["n"] = o.n;
    params["k"] = o.k;
    params["forbid"] = o.forbid;
    params["seed"] = ls.seed;
    params["budget"] = ls.budget;
    params["seeds"] = ls.seeds;
    if (!o.output.empty()) params["output"] = o.output;
    const auto witness = local_search_witness(o.n, o.k, forbidden, ls);
    Json result{{"found", witness.has_value()}};
    if (!witness) return {std::move(result), kBudget};
    std::size_t count = 0;
    result["checks"] = violations_json(*witness, forbidden, count);
    emit_coloring(result, *witness, o.output);
    return {std::move(result), kOk};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gallai colorings: construct, verify, decompose, bound and search.", "gallai-cli"};
    app.require_subcommand(1, 1);
    Options o;

    auto* construct = app.add_subcommand("construct", "Build a witness coloring");
    construct->add_option("recipe", o.recipe, "k5 | double | blowup5 | wheel-join | w5-tower | gr-tower")->required();
    construct->add_option("--n", o.n, "Wheel order");
    construct->add_option("--k", o.k, "Number of colors");
    construct->add_option("--base", o.base, "14-vertex base for w5-tower");
    construct->add_option("--input", o.input, "Input coloring for double / blowup5");
    construct->add_option("-o,--output", o.output, "Write the coloring here");

    auto* verify = app.add_subcommand("verify", "Check a coloring against forbidden patterns");
    verify->add_option("file", o.file, "Coloring (.ecg or JSON mirror)")->required();
    verify->add_option("--forbid", o.forbid, "Pattern such as W5@0, C6@any, rainbow-K3")->required();

    auto* partition = app.add_subcommand("partition", "Find or check a Gallai partition");
    partition->add_option("file", o.file, "Coloring")->required();
    partition->add_option("--verify", o.verify_file, "Partition JSON to check");

    auto* reduce = app.add_subcommand("reduce", "Reduced graph of a Gallai partition");
    reduce->add_option("file", o.file, "Coloring")->required();
    reduce->add_option("partition", o.part_file, "Partition JSON")->required();
    reduce->add_option("-o,--output", o.output, "Write the reduced coloring here");

    auto* bounds = app.add_subcommand("bounds", "Evaluate a closed-form bound");
    bounds->add_option("formula", o.formula,
                       "ramsey-cycle | ramsey-wheel | gr-w5 | gr-wheel | gr-mixed | gr-odd-cycle | gr-fan")
        ->required();
    bounds->add_option("--n", o.b_n);
    bounds->add_option("--m", o.b_m);
    bounds->add_option("--k", o.b_k);
    bounds->add_option("--l", o.b_l);
    bounds->add_option("--r", o.b_r);
    bounds->add_option("--s", o.b_s);
    bounds->add_option("--t", o.b_t);

    auto* search = app.add_subcommand("search", "Exhaustive avoidance search");
    search->add_option("task", o.task_file, "Task JSON")->required();
    search->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--budget", o.budget, "Node budget");
    search->add_option("--seconds", o.seconds, "Wall-clock budget")->check(CLI::NonNegativeNumber);
    search->add_option("--split", o.split, "Prefix order handed to workers");
    search->add_option("--threshold", o.threshold, "Largest prefix checked for canonicity");
    search->add_flag("--no-canonicity", o.no_canonicity, "Disable canonicity pruning");
    search->add_flag("--timing", o.timing, "Include elapsed time in the report");
    search->add_option("-o,--output", o.output, "Write the witness here");

    auto* witness = app.add_subcommand("witness-search", "Local search for an avoiding coloring");
    witness->add_option("n", o.n, "Order")->required();
    witness->add_option("k", o.k, "Number of colors")->required();
    witness->add_option("--forbid", o.forbid, "Forbidden pattern")->required();
    witness->add_option("--seed", o.seed, "First seed");
    witness->add_option("--budget", o.steps, "Recolor steps per seed");
    witness->add_option("--seeds", o.seeds, "Number of seeds")->check(CLI::PositiveNumber);
    witness->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    witness->add_option("-o,--output", o.output, "Write the witness here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        out << sub->help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        const auto subs = app.get_subcommands();
        err << e.what() << "\n\n" << (subs.empty() ? app.help() : subs.front()->help());
        return kUsage;
    }

    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    Json params = Json::object();
    Outcome outcome;
    try {
        if (sub == construct) outcome = do_construct(o, params);
        else if (sub == verify) outcome = do_verify(o, params);
        else if (sub == partition) outcome = do_partition(o, params);
        else if (sub == reduce) outcome = do_reduce(o, params);
        else if (sub == bounds) outcome = do_bounds(o, params);
        else if (sub == search) outcome = do_search(o, params);
        else outcome = do_witness_search(o, params);
    } catch (const Error& e) {
        err << name << ": " << e.what() << "\n";
        outcome.result = Json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
        outcome.exit_code = kUsage;
    }
    Json report{{"command", {{"name", name}, {"params", std::move(params)}}},
                {"result", std::move(outcome.result)},
                {"exit_code", outcome.exit_code}};
    out << report.dump(2) << "\n";
    return outcome.exit_code;
}

}  // namespace gallai::cli
