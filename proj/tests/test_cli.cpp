#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kundupack/cli.hpp"
#include "kundupack/io.hpp"

using namespace kundu;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("kundupack_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const {
        auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("parse_instance formats") {
    auto seq = io::parse_instance("2 2 2");
    REQUIRE(std::holds_alternative<DegreeSequence>(seq));
    CHECK(std::get<DegreeSequence>(seq).values() == std::vector<int>{2, 2, 2});

    auto g = io::parse_instance("4 2\n0 1\n2 3\n");
    REQUIRE(std::holds_alternative<LabeledGraph>(g));
    CHECK(std::get<LabeledGraph>(g).order() == 4);
    CHECK(std::get<LabeledGraph>(g).size() == 2);

    auto kr = io::parse_instance(R"({"graph":[[0,1]],"factor":[[0,2],[1,3]]})");
    REQUIRE(std::holds_alternative<KunduRealization>(kr));
    CHECK(std::get<KunduRealization>(kr).order() == 4);
}

TEST_CASE("parse errors carry line and column") {
    try {
        io::parse_instance("4 1\n0 0\n");
        FAIL("loop accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
        CHECK(std::string(e.what()).find("loop") != std::string::npos);
    }
    try {
        io::parse_degree_sequence("1 x 2");
        FAIL("bad token accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(io::parse_graph("3 1\n2 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_graph("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_graph("3 2\n0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_kundu_realization("{\"graph\": [[0,1]],\n \"factor\": [[0,"), ParseError);
    CHECK_THROWS_AS(io::parse_kundu_realization(R"({"graph":[[0,1]],"factor":[[0,1],[2,3]]})"), ParseError);
    CHECK_THROWS_AS(io::parse_trace(R"({"start":{}})"), ParseError);
}

TEST_CASE("trace JSON round-trips with fixed key order") {
    KunduRealization kr = io::parse_kundu_realization(R"({"graph":[[0,1],[2,3]],"factor":[[0,2],[1,3]]})");
    Swap s{{Edge{0, 2}, Edge{1, 3}}, {Edge{0, 3}, Edge{1, 2}}, Layer::factor};
    SwapTrace t{fingerprint(kr), {s}, fingerprint(apply_k_swap(kr, s))};
    const std::string text = io::to_json(t).dump();
    CHECK(text ==
          R"({"start":{"graph":[[0,1],[2,3]],"factor":[[0,2],[1,3]]},"swaps":[{"layer":"factor","remove":[[0,2],[1,3]],"add":[[0,3],[1,2]]}],"end":{"graph":[[0,1],[2,3]],"factor":[[0,3],[1,2]]}})");
    SwapTrace back = io::parse_trace(text);
    CHECK(back.start == t.start);
    CHECK(back.end == t.end);
    CHECK(back.swaps == t.swaps);
    CHECK(io::format_graph(kr.green) == "4 2\n0 1\n2 3\n");
}

TEST_CASE("check") {
    auto r = run({"check", "1 1 0 0"});
    CHECK(r.code == 0);
    CHECK(r.out == "graphic=true kundu_feasible=true\n");
    CHECK(run({"check", "3 3 3 3"}).out == "graphic=true kundu_feasible=false\n");
    CHECK(run({"check", "1 1 1"}).out == "graphic=false kundu_feasible=false\n");
    CHECK(run({"check", "1 1 0 0", "--json"}).out == "{\"graphic\":true,\"kundu_feasible\":true}\n");
    CHECK(run({"check", "1 -1"}).code == 2);
    CHECK(run({"check", "1 q"}).code == 2);
}

TEST_CASE("realize and kundu") {
    auto r = run({"realize", "2 2 2"});
    CHECK(r.code == 0);
    CHECK(r.out == "3 3\n0 1\n0 2\n1 2\n");
    CHECK(run({"realize", "1 1 1"}).code == 1);

    auto k = run({"kundu", "1 1 1 1", "--seed", "4"});
    CHECK(k.code == 0);
    auto kr = io::parse_kundu_realization(k.out);
    CHECK_FALSE(invariant_violation(kr));
    CHECK(run({"kundu", "1 1 1 1", "--seed", "4"}).out == k.out);
    CHECK(run({"kundu", "3 3 3 3"}).code == 1);
    CHECK(run({"kundu", "1 1 1 1", "--mode", "guaranteed"}).code == 1);
    CHECK(run({"kundu", "1 1 1 1", "--mode", "sometimes"}).code == 2);
}

TEST_CASE("oracle subcommands") {
    CHECK(run({"oracle", "coverage", "1 1 0 0"}).out == "covered=false witness=[[0,1],[2,3]]\n");
    CHECK(run({"oracle", "coverage", "1 1 1 1"}).out == "covered=true\n");
    CHECK(run({"oracle", "matchings", "6"}).out.starts_with("count=15\n"));
    CHECK(run({"oracle", "realizations", "1 1 1 1"}).out.starts_with("count=3\n"));
    CHECK(run({"oracle", "kundu", "1 1 1 1"}).out.starts_with("count=6\n"));
    CHECK(run({"oracle", "metagraph", "0 0 0 0"}).out ==
          "nodes=3 edges=3 components=1 connected=true witnesses=[]\n");
    CHECK(run({"oracle", "metagraph", "0 0 0 0", "--json"}).out ==
          "{\"nodes\":3,\"edges\":3,\"components\":1,\"witnesses\":[]}\n");
    CHECK(run({"oracle", "realizations", "0 0 0 0 0 0 0 0 0 0 0 0"}).code == 2);
    CHECK(run({"oracle", "realizations", "0 0 0 0 0 0 0 0 0 0 0 0", "--max-n", "12"}).out == "count=1\n[]\n");
    CHECK(run({"oracle", "bogus", "1 1"}).code == 2);
}

TEST_CASE("navigate, embed and verify round-trip through files") {
    TempDir dir;
    auto a = run({"random", "48:2", "--seed", "3"});
    REQUIRE(a.code == 0);
    const KunduRealization start = io::parse_kundu_realization(a.out);
    const std::string pi = io::format_degree_sequence(DegreeSequence(start.green.degree_sequence()));
    auto b = run({"random", pi, "--seed", "5"});
    REQUIRE(b.code == 0);
    const std::string start_path = dir.write("start.json", a.out);
    const std::string goal_path = dir.write("goal.json", b.out);

    auto nav = run({"navigate", start_path, goal_path, "--mode", "guaranteed"});
    REQUIRE(nav.code == 0);
    CHECK(run({"navigate", start_path, goal_path, "--mode", "guaranteed"}).out == nav.out);
    const std::string trace_path = dir.write("trace.json", nav.out);
    auto ok = run({"verify", start_path, trace_path});
    CHECK(ok.code == 0);
    CHECK(ok.out.starts_with("ok steps="));

    // Tamper with the fourth swap: its added pairs become its removed pairs.
    io::Json doc = io::Json::parse(nav.out);
    REQUIRE(doc["swaps"].size() > 3);
    doc["swaps"][3]["add"] = doc["swaps"][3]["remove"];
    const std::string bad_path = dir.write("bad.json", doc.dump());
    auto bad = run({"verify", start_path, bad_path});
    CHECK(bad.code == 1);
    CHECK(bad.out.starts_with("InvalidSwap step=3"));

    std::string zeros;
    for (int i = 0; i < 48; ++i) zeros += i ? " 0" : "0";
    auto jr = run({"random", zeros, "--seed", "9"});
    REQUIRE(jr.code == 0);
    const std::string factor_path = dir.write("factor.json", jr.out);
    auto emb = run({"embed", start_path, factor_path, "--mode", "guaranteed"});
    REQUIRE(emb.code == 0);
    io::Json edoc = io::Json::parse(emb.out);
    CHECK(edoc.contains("result"));
    edoc.erase("result");
    const std::string etrace = dir.write("etrace.json", edoc.dump());
    CHECK(run({"verify", start_path, etrace}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"navigate", "only-one"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "{", "{}"}).code == 2);
}

TEST_CASE("installed binary") {
    const char* bin = std::getenv("KUNDUPACK_BIN");
    if (!bin) return;
    const std::string cmd = std::string(bin) + " check \"1 1 0 0\" > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    const std::string bad = std::string(bin) + " check \"1 x\" 2> /dev/null";
    const int status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == 2);
}
