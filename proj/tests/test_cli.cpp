#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jramsey/cli.hpp"
#include "jramsey/graph6.hpp"

using namespace jramsey;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::vector<std::string> payload;  // all lines before the report
    json report;
};

RunResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    RunResult r;
    r.code = cli::run(args, in, out);
    std::istringstream lines(out.str());
    std::string line, last;
    while (std::getline(lines, line)) {
        if (!last.empty()) r.payload.push_back(last);
        last = line;
    }
    if (!last.empty()) r.report = json::parse(last);
    return r;
}

}  // namespace

TEST_CASE("gen emits graph6 plus a report") {
    auto r = run_cli({"gen", "path", "5"});
    CHECK(r.code == 0);
    REQUIRE(r.payload.size() == 1);
    CHECK(parse_graph6(r.payload[0]) == Graph::path(5));
    CHECK(r.report["schema_version"] == 1);
    CHECK(r.report["command"] == "gen");
    CHECK(r.report["order"] == 5);
    CHECK(r.report["totals"]["edges"] == 4);

    auto j = run_cli({"gen", "jahangir", "3"});
    CHECK(j.code == 0);
    CHECK(parse_graph6(j.payload[0]) == Graph::jahangir(3));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"gen", "petersen", "5"}).code == 2);
    CHECK(run_cli({"gen", "cycle", "2"}).code == 2);
    CHECK(run_cli({"contains", "clique", "3"}).code == 2);
    CHECK(run_cli({"contains", "path", "3", "4"}, "Ch\n").code == 2);
    CHECK(run_cli({"verify", "1"}).code == 2);
    CHECK(run_cli({"verify", "1", "3", "2"}).code == 2);  // out of proven range
}

TEST_CASE("ceiling errors exit 3") {
    CHECK(run_cli({"enumerate", "11", "--count-only"}).code == 3);
    // chromatic number is exact only up to order 16
    CHECK(run_cli({"bound", emit_graph6(Graph::complete(17)), "Ch"}).code == 3);
}

TEST_CASE("contains reads graph6 from stdin") {
    std::string input = emit_graph6(Graph::path(5)) + "\n" + emit_graph6(Graph::star(5)) + "\n";
    auto r = run_cli({"contains", "path", "4"}, input);
    CHECK(r.code == 0);
    REQUIRE(r.payload.size() == 2);
    CHECK(r.payload[0] == "true");
    CHECK(r.payload[1] == "false");
    CHECK(r.report["totals"]["graphs"] == 2);
    CHECK(r.report["totals"]["containing"] == 1);

    auto k = run_cli({"contains", "kpaths", "2", "4"},
                     emit_graph6(Graph::complete(9)) + "\n");
    CHECK(k.code == 0);
    CHECK(k.payload[0] == "true");

    auto jg = run_cli({"contains", "jahangir", "2"},
                      emit_graph6(Graph::complete(5)) + "\n" + emit_graph6(Graph::cycle(5)) + "\n");
    CHECK(jg.code == 0);
    CHECK(jg.payload[0] == "true");
    CHECK(jg.payload[1] == "false");
}

TEST_CASE("witness builds the lower-bound graph") {
    auto r = run_cli({"witness", "1", "5", "2"});
    CHECK(r.code == 0);
    REQUIRE(r.payload.size() == 1);
    CHECK(parse_graph6(r.payload[0]) == Graph::union_of_completes({1, 4}));
    CHECK(r.report["totals"]["witness_valid"] == true);

    auto none = run_cli({"witness", "1", "4", "2"});
    CHECK(none.code == 0);
    CHECK(none.payload.empty());
    CHECK(none.report["totals"]["witness_available"] == false);
}

TEST_CASE("verify settles (1,5,2) end to end") {
    auto r = run_cli({"verify", "1", "5", "2", "--shards", "2"});
    CHECK(r.code == 0);
    CHECK(r.report["totals"]["claimed"] == 6);
    CHECK(r.report["totals"]["classes_total"] == 156);
    CHECK(r.report["failures"] == 0);
    CHECK(r.report["totals"]["lower_failed"] == 0);
}

TEST_CASE("verify --order below the threshold reports counterexamples") {
    auto r = run_cli({"verify", "1", "4", "2", "--order", "5", "--shards", "2"});
    CHECK(r.code == 1);
    CHECK(r.report["totals"]["classes_total"] == 34);
    CHECK(r.report["failures"].get<int>() >= 1);
    CHECK_FALSE(r.report["counterexamples"].empty());
}

TEST_CASE("enumerate counts and shards") {
    auto r = run_cli({"enumerate", "6", "--count-only"});
    CHECK(r.code == 0);
    REQUIRE(r.payload.size() == 1);
    CHECK(r.payload[0] == "156");
    CHECK(r.report["totals"]["classes"] == 156);

    auto s0 = run_cli({"enumerate", "5", "--count-only", "--shards", "2", "--shard", "0"});
    auto s1 = run_cli({"enumerate", "5", "--count-only", "--shards", "2", "--shard", "1"});
    CHECK(std::stoi(s0.payload[0]) + std::stoi(s1.payload[0]) == 34);

    auto full = run_cli({"enumerate", "4"});
    CHECK(full.code == 0);
    REQUIRE(full.payload.size() == 11);
    for (const auto& g6 : full.payload) CHECK(parse_graph6(g6).order() == 4);
}

TEST_CASE("enumerate checkpoint resume skips finished work") {
    std::string path = "cli_enum_ckpt.json";
    std::remove(path.c_str());
    auto first = run_cli({"enumerate", "6", "--count-only", "--shards", "2", "--shard", "0",
                          "--checkpoint", path});
    CHECK(first.code == 0);
    auto again = run_cli({"enumerate", "6", "--count-only", "--shards", "2", "--shard", "0",
                          "--checkpoint", path});
    CHECK(again.code == 0);
    CHECK(again.payload[0] == "0");  // everything already processed

    CHECK(run_cli({"enumerate", "6", "--count-only", "--shards", "2", "--checkpoint", path})
              .code == 2);
    std::remove(path.c_str());
}

TEST_CASE("bound computes the Chvatal-Harary value") {
    auto r = run_cli({"bound", emit_graph6(Graph::complete(3)), emit_graph6(Graph::path(4))});
    CHECK(r.code == 0);
    REQUIRE(r.payload.size() == 1);
    CHECK(r.payload[0] == "7");
    CHECK(r.report["totals"]["bound"] == 7);
}

TEST_CASE("extract thm2 tallies subcases") {
    std::string input = emit_graph6(Graph::star(9)) + "\n" +
                        emit_graph6(Graph::union_of_completes({3, 3, 3})) + "\n";
    auto r = run_cli({"extract", "thm2"}, input);
    CHECK(r.code == 0);
    CHECK(r.report["totals"]["graphs"] == 2);
    CHECK(r.report["failures"] == 0);
    int tallied = 0;
    for (const auto& [key, v] : r.report["subcase_tallies"].items()) tallied += v.get<int>();
    CHECK(tallied == 2);
}

TEST_CASE("extract thm1 and kpaths") {
    auto r = run_cli({"extract", "thm1", "7", "3"},
                     emit_graph6(Graph::union_of_completes({3, 6})) + "\n");
    CHECK(r.code == 0);
    CHECK(r.report["failures"] == 0);

    auto k = run_cli({"extract", "kpaths", "2", "4", "2"},
                     emit_graph6(Graph::complete(9)) + "\n");
    CHECK(k.code == 0);
    CHECK(k.report["results"][0]["paths"].size() == 2);

    CHECK(run_cli({"extract", "thm1", "7"}, "H??????\n").code == 2);
}

TEST_CASE("sample reports trial outcomes") {
    auto r = run_cli({"sample", "1", "5", "2", "--order", "6", "--trials", "25", "--seed", "9"});
    CHECK(r.code == 0);
    CHECK(r.report["totals"]["trials"] == 25);
    CHECK(r.report["totals"]["confirmed_pass"] == 25);
    CHECK(r.report["seed"] == 9);

    auto bad = run_cli({"sample", "1", "5", "2", "--order", "4", "--trials", "5", "--seed", "1"});
    CHECK(bad.code == 1);
    CHECK(bad.report["failures"] == 5);
}
