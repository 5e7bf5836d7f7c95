#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "gallai/cli.hpp"
#include "gallai/constructions.hpp"
#include "gallai/json_io.hpp"

using namespace gallai;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json report() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("gallai-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) {
    std::ofstream(path, std::ios::binary) << text;
}

std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::string kBase = std::string(GALLAI_TEST_DATA_DIR) + "/base-w5-14.ecg";

}  // namespace

TEST_CASE("bounds") {
    const auto r = run({"bounds", "gr-w5", "--k", "4"});
    CHECK(r.code == 0);
    const auto j = r.report();
    CHECK(j["exit_code"] == 0);
    CHECK(j["command"]["name"] == "bounds");
    CHECK(j["result"]["kind"] == "exact");
    CHECK(j["result"]["value"] == 71);

    CHECK(run({"bounds", "gr-mixed", "--n", "6", "--r", "1", "--s", "1", "--t", "1"}).report()["result"]["hi"] == 2415);
    CHECK(run({"bounds", "ramsey-wheel", "--n", "8"}).report()["result"]["lo"] == 21);
    CHECK(run({"bounds", "ramsey-cycle", "--m", "4", "--n", "4"}).report()["result"]["notes"].empty() == false);

    const auto missing = run({"bounds", "gr-wheel", "--n", "6"});
    CHECK(missing.code == 2);
    CHECK_FALSE(missing.err.empty());
    CHECK(run({"bounds", "ramsey-cycle", "--m", "5", "--n", "4"}).code == 2);
}

TEST_CASE("usage errors") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {}, {"frobnicate"}, {"bounds"}, {"bounds", "gr-w5", "--q", "1"}, {"verify", "x.ecg"},
             {"search", "t.json", "--workers", "0"}, {"witness-search", "8"}}) {
        const auto r = run(args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.find("Usage") != std::string::npos);
    }
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("witness-search") != std::string::npos);
}

TEST_CASE("construct and verify") {
    TempDir tmp;
    const auto t3 = tmp.file("t3.ecg");
    const auto built = run({"construct", "w5-tower", "--k", "3", "--base", kBase, "-o", t3});
    REQUIRE(built.code == 0);
    CHECK(built.report()["result"]["order"] == 28);
    CHECK(built.report()["result"]["violations"] == 0);
    CHECK(parse(read(t3)).order() == 28);

    const auto ok = run({"verify", t3, "--forbid", "rainbow-K3", "--forbid", "W5@any"});
    CHECK(ok.code == 0);
    CHECK(ok.report()["result"]["violations"] == 0);

    const auto bad = run({"verify", t3, "--forbid", "C3@any"});
    CHECK(bad.code == 1);
    const auto hit = bad.report()["result"]["checks"][0]["hit"];
    CHECK(hit["shape"] == "cycle");
    CHECK(hit["vertices"].size() == 3);

    CHECK(run({"verify", t3, "--forbid", "W9@0"}).code == 0);  // larger than nothing it contains
    CHECK(run({"verify", t3, "--forbid", "Q5@0"}).code == 2);
    CHECK(run({"verify", tmp.file("missing.ecg"), "--forbid", "C3@any"}).code == 2);
    write(tmp.file("broken.ecg"), "ecg 3 2\n0 0\n");
    const auto broken = run({"verify", tmp.file("broken.ecg"), "--forbid", "C3@any"});
    CHECK(broken.code == 2);
    CHECK(broken.report()["result"]["error"]["code"] == "ParseError");

    for (const char* recipe : {"k5", "wheel-join", "gr-tower"}) {
        std::vector<std::string> args{"construct", recipe, "--n", "7", "--k", "3"};
        const auto r = run(args);
        CHECK(r.code == 0);
        CHECK(r.report()["result"].contains("ecg"));
    }
    CHECK(run({"construct", "gr-tower", "--n", "7", "--k", "3"}).report()["result"]["formula_order"] == 22);
    write(tmp.file("k5.ecg"), serialize(k5_two_coloring()));
    CHECK(run({"construct", "double", "--input", tmp.file("k5.ecg")}).report()["result"]["order"] == 10);
    CHECK(run({"construct", "blowup5", "--input", tmp.file("k5.ecg")}).report()["result"]["order"] == 25);
    CHECK(run({"construct", "double"}).code == 2);
    CHECK(run({"construct", "pentagon"}).code == 2);

    // the JSON mirror is accepted wherever a coloring is read
    write(tmp.file("k5.json"), coloring_to_json(k5_two_coloring()).dump());
    CHECK(run({"verify", tmp.file("k5.json"), "--forbid", "C3@any"}).code == 0);
}

TEST_CASE("data directory override") {
    TempDir tmp;
    write(tmp.file("base-w5-14.ecg"), read(kBase));
    ::setenv("GALLAI_DATA_DIR", tmp.path.c_str(), 1);
    CHECK(run({"construct", "w5-tower", "--k", "4"}).report()["result"]["order"] == 70);
    fs::remove(tmp.file("base-w5-14.ecg"));
    CHECK(run({"construct", "w5-tower", "--k", "4"}).code == 2);
    ::unsetenv("GALLAI_DATA_DIR");
}

TEST_CASE("partition and reduce") {
    TempDir tmp;
    const auto g = double_coloring(k5_two_coloring());
    write(tmp.file("g.ecg"), serialize(g));
    const auto found = run({"partition", tmp.file("g.ecg")});
    REQUIRE(found.code == 0);
    const auto part = found.report()["result"]["partition"];
    CHECK(part["parts"].size() == 2);
    write(tmp.file("p.json"), part.dump());

    CHECK(run({"partition", tmp.file("g.ecg"), "--verify", tmp.file("p.json")}).code == 0);
    const auto reduced = run({"reduce", tmp.file("g.ecg"), tmp.file("p.json")});
    CHECK(reduced.code == 0);
    CHECK(reduced.report()["result"]["ecg"] == "ecg 2 1\n0\n");
    CHECK(reduced.report()["result"]["palette_map"] == Json::array({2}));

    write(tmp.file("bad.json"), R"({"parts":[[0,1,2,3,4,5,6,7,8,9]]})");
    const auto trivial = run({"partition", tmp.file("g.ecg"), "--verify", tmp.file("bad.json")});
    CHECK(trivial.code == 1);
    CHECK(trivial.report()["result"]["report"]["violation"] == "trivial");
    CHECK(run({"reduce", tmp.file("g.ecg"), tmp.file("bad.json")}).code == 1);
    write(tmp.file("overlap.json"), R"({"parts":[[0,1],[1,2,3,4,5,6,7,8,9]]})");
    CHECK(run({"partition", tmp.file("g.ecg"), "--verify", tmp.file("overlap.json")}).code == 2);

    write(tmp.file("rainbow.ecg"), "ecg 3 3\n0 1\n2\n");
    const auto rainbow = run({"partition", tmp.file("rainbow.ecg")});
    CHECK(rainbow.code == 1);
    CHECK(rainbow.report()["result"]["gallai"] == false);
}

TEST_CASE("search command") {
    TempDir tmp;
    write(tmp.file("c5.json"), R"({"n":9,"k":2,"forbidden":["C5@0","C5@1"]})");
    const auto a = run({"search", tmp.file("c5.json")});
    CHECK(a.code == 0);
    CHECK(a.report()["result"]["status"] == "exhausted");
    CHECK(a.report()["result"]["witness"].is_null());

    write(tmp.file("c5w.json"), R"({"n":8,"k":2,"forbidden":["C5@0","C5@1"]})");
    const auto one = run({"search", tmp.file("c5w.json"), "--workers", "1", "-o", tmp.file("w.ecg")});
    const auto four = run({"search", tmp.file("c5w.json"), "--workers", "4"});
    CHECK(one.code == 0);
    CHECK(one.report()["result"]["status"] == "witness-found");
    CHECK(one.report()["result"] == four.report()["result"]);
    CHECK(read(tmp.file("w.ecg")) == one.report()["result"]["witness"].get<std::string>());

    const auto budget = run({"search", tmp.file("c5.json"), "--budget", "10"});
    CHECK(budget.code == 3);
    CHECK(budget.report()["result"]["status"] == "budget-exceeded");

    write(tmp.file("bad.json"), R"({"n":9,"k":2,"forbidden":[]})");
    CHECK(run({"search", tmp.file("bad.json")}).code == 2);
    write(tmp.file("junk.json"), "{");
    CHECK(run({"search", tmp.file("junk.json")}).code == 2);

    const auto timed = run({"search", tmp.file("c5.json"), "--timing"});
    CHECK(timed.report()["result"]["stats"].contains("elapsed_seconds"));
    CHECK_FALSE(a.report()["result"]["stats"].contains("elapsed_seconds"));
}

TEST_CASE("witness search") {
    const std::vector<std::string> base{"witness-search", "8", "2", "--forbid", "C5@0", "--forbid", "C5@1",
                                        "--seed", "5", "--seeds", "3", "--budget", "20000"};
    auto with_workers = [&](const char* w) {
        auto args = base;
        args.insert(args.end(), {"--workers", w});
        return run(args);
    };
    const auto a = with_workers("1");
    const auto b = with_workers("4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.report()["result"]["found"] == true);

    const auto none = run({"witness-search", "9", "2", "--forbid", "C5@0", "--forbid", "C5@1", "--budget", "500"});
    CHECK(none.code == 3);
    CHECK(none.report()["result"]["found"] == false);
}
