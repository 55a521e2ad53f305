#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jramsey/graph6.hpp"

using namespace jramsey;

namespace {

Graph random_graph(int order, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (rng() & 1) edges.emplace_back(u, v);
    return Graph::from_edges(order, edges);
}

}  // namespace

TEST_CASE("known encodings") {
    CHECK(emit_graph6(Graph::complete(1)) == "@");
    CHECK(emit_graph6(Graph::empty(2)) == "A?");
    CHECK(emit_graph6(Graph::complete(2)) == "A_");
    CHECK(emit_graph6(Graph::complete(4)) == "C~");
    CHECK(parse_graph6("C~") == Graph::complete(4));
    CHECK(parse_graph6("@") == Graph::complete(1));

    // bit layout: columns (0,1),(0,2),(1,2),(0,3),(1,3),(2,3), MSB first
    Graph p4 = Graph::path(4);
    std::string enc = emit_graph6(p4);
    REQUIRE(enc.size() == 2);
    CHECK(enc[0] == 'C');
    CHECK(enc[1] - 63 == 0b101001);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("C~~"), std::invalid_argument);   // too long
    CHECK_THROWS_AS(parse_graph6("C"), std::invalid_argument);     // too short
    CHECK_THROWS_AS(parse_graph6("C\x1f"), std::invalid_argument); // byte < 63
    CHECK_THROWS_AS(parse_graph6("A~"), std::invalid_argument);    // nonzero padding
    CHECK_THROWS_AS(parse_graph6(">~"), std::invalid_argument);    // bad header byte
}

TEST_CASE("emit ceiling") {
    CHECK_NOTHROW(emit_graph6(Graph::empty(62)));
    CHECK_THROWS_AS(emit_graph6(Graph::empty(63)), CeilingError);
}

TEST_CASE("round trip property") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 62);
        Graph g = random_graph(n, rng);
        std::string enc = emit_graph6(g);
        for (char c : enc) {
            CHECK(c >= 63);
            CHECK(c <= 126);
        }
        CHECK(parse_graph6(enc) == g);
    }
}

TEST_CASE("describe_graph") {
    CHECK(describe_graph(Graph::complete(4)) == "C~");
    std::string big = describe_graph(Graph::path(70));
    CHECK(big.find("n=70;edges=0-1,") == 0);
    CHECK(big.find("68-69") != std::string::npos);
}
