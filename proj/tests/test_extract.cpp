#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jramsey/detect.hpp"
#include "jramsey/enumerate.hpp"
#include "jramsey/extract.hpp"

using namespace jramsey;

namespace {

Graph random_graph_p(int order, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(order, edges);
}

void check_extraction(const Graph& f, int m, const JahangirExtraction& r) {
    CHECK(validate_jahangir_embedding(f.complement(), m, r.embedding));
    CHECK_FALSE(r.trace.subcase.empty());
}

}  // namespace

TEST_CASE("validate_embedding") {
    Graph pat = Graph::path(3);
    Graph host = Graph::cycle(5);
    CHECK(validate_embedding(pat, host, Embedding{{0, 1, 2}}));
    CHECK_FALSE(validate_embedding(pat, host, Embedding{{0, 1, 3}}));  // 1-3 not an edge
    CHECK_FALSE(validate_embedding(pat, host, Embedding{{0, 1, 0}}));  // not injective
    CHECK_FALSE(validate_embedding(pat, host, Embedding{{0, 1, 5}}));  // out of range
    CHECK_FALSE(validate_embedding(pat, host, Embedding{{0, 1}}));     // wrong arity
}

TEST_CASE("validate_jahangir_embedding") {
    Graph j3 = Graph::jahangir(3);
    JahangirEmbedding ok{6, {0, 1, 2, 3, 4, 5}};
    CHECK(validate_jahangir_embedding(j3, 3, ok));
    CHECK_FALSE(validate_jahangir_embedding(j3, 3, JahangirEmbedding{6, {1, 0, 2, 3, 4, 5}}));
    CHECK_FALSE(validate_jahangir_embedding(j3, 3, JahangirEmbedding{0, {1, 2, 3, 4, 5, 6}}));
    CHECK_FALSE(validate_jahangir_embedding(j3, 2, ok));
    CHECK_FALSE(validate_jahangir_embedding(j3, 3, JahangirEmbedding{6, {0, 1, 2, 3, 4, 4}}));
}

TEST_CASE("theorem-1 extraction on structured hosts") {
    // (n,m) = (7,3): order 9, P_7-free
    for (const Graph& f : {Graph::union_of_completes({3, 6}), Graph::union_of_completes({4, 5}),
                           Graph::union_of_completes({1, 2, 6}), Graph::empty(9),
                           Graph::union_of_completes({2, 3, 4}), Graph::star(9)}) {
        REQUIRE_FALSE(contains_path(f, 7).has_value());
        auto r = extract_jahangir_theorem1(f, 7, 3);
        check_extraction(f, 3, r);
    }

    // (n,m) = (9,4): order 12
    auto r4 = extract_jahangir_theorem1(Graph::union_of_completes({4, 8}), 9, 4);
    check_extraction(Graph::union_of_completes({4, 8}), 4, r4);

    // (n,m) = (11,5): order 15
    auto r5 = extract_jahangir_theorem1(Graph::union_of_completes({5, 10}), 11, 5);
    check_extraction(Graph::union_of_completes({5, 10}), 5, r5);
}

TEST_CASE("theorem-1 preconditions") {
    CHECK_THROWS_AS(extract_jahangir_theorem1(Graph::empty(9), 7, 2), std::invalid_argument);
    CHECK_THROWS_AS(extract_jahangir_theorem1(Graph::empty(9), 7, 6), std::invalid_argument);
    CHECK_THROWS_AS(extract_jahangir_theorem1(Graph::empty(9), 6, 3), std::invalid_argument);
    CHECK_THROWS_AS(extract_jahangir_theorem1(Graph::empty(8), 7, 3), std::invalid_argument);
    CHECK_THROWS_AS(extract_jahangir_theorem1(Graph::path(9), 7, 3), std::invalid_argument);
}

TEST_CASE("theorem-1 extraction over random P_7-free hosts of order 9") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 400) {
        Graph f = random_graph_p(9, 0.25, rng);
        if (contains_path(f, 7)) continue;
        ++done;
        auto r = extract_jahangir_theorem1(f, 7, 3);
        check_extraction(f, 3, r);
    }
}

TEST_CASE("theorem-1 extraction over random hosts for m=4 and m=5") {
    std::mt19937_64 rng(37);
    int done4 = 0;
    while (done4 < 120) {
        Graph f = random_graph_p(12, 0.2, rng);
        if (contains_path(f, 9)) continue;
        ++done4;
        check_extraction(f, 4, extract_jahangir_theorem1(f, 9, 4));
    }
    int done5 = 0;
    while (done5 < 60) {
        Graph f = random_graph_p(15, 0.18, rng);
        if (contains_path(f, 11)) continue;
        ++done5;
        check_extraction(f, 5, extract_jahangir_theorem1(f, 11, 5));
    }
}

TEST_CASE("theorem-2 base extraction on structured hosts") {
    for (const Graph& f : {Graph::star(9), Graph::union_of_completes({3, 3, 3}),
                           Graph::empty(9), Graph::union_of_completes({1, 2, 3, 3}),
                           Graph::complete_bipartite(1, 8)}) {
        REQUIRE_FALSE(contains_disjoint_paths(f, 2, 4).has_value());
        auto r = extract_j4_theorem2_base(f);
        check_extraction(f, 2, r);
    }
    CHECK_THROWS_AS(extract_j4_theorem2_base(Graph::empty(8)), std::invalid_argument);
    CHECK_THROWS_AS(extract_j4_theorem2_base(Graph::complete(9)), std::invalid_argument);
}

TEST_CASE("theorem-2 base extraction over random 2P_4-free hosts") {
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 400) {
        Graph f = random_graph_p(9, 0.22, rng);
        if (contains_disjoint_paths(f, 2, 4)) continue;
        ++done;
        check_extraction(f, 2, extract_j4_theorem2_base(f));
    }
}

TEST_CASE("extract_k_paths peels disjoint paths") {
    // (2,4,2): order 9, complement must be J_4-free
    auto paths = extract_k_paths(Graph::complete(9), {2, 4, 2});
    REQUIRE(paths.size() == 2);
    Bits128 used;
    for (const auto& e : paths) {
        CHECK(validate_embedding(Graph::path(4), Graph::complete(9), e));
        for (int v : e.map) {
            CHECK_FALSE(used.test(v));
            used.set(v);
        }
    }

    // complement of K_1 u K_8 is a star: J_4-free, and K_8 holds both paths
    auto p2 = extract_k_paths(Graph::union_of_completes({1, 8}), {2, 4, 2});
    REQUIRE(p2.size() == 2);
    for (const auto& e : p2)
        CHECK(validate_embedding(Graph::path(4), Graph::union_of_completes({1, 8}), e));

    // (2,7,3): order 16
    auto p3 = extract_k_paths(Graph::complete(16), {2, 7, 3});
    REQUIRE(p3.size() == 2);
    for (const auto& e : p3) CHECK(validate_embedding(Graph::path(7), Graph::complete(16), e));
}

TEST_CASE("extract_k_paths preconditions") {
    CHECK_THROWS_AS(extract_k_paths(Graph::complete(9), {2, 3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(extract_k_paths(Graph::complete(8), {2, 4, 2}), std::invalid_argument);
    // complement of the empty graph is complete, hence J-laden
    CHECK_THROWS_AS(extract_k_paths(Graph::empty(9), {2, 4, 2}), std::invalid_argument);
    CHECK_THROWS_AS(extract_k_paths(Graph::complete(51), {2, 25, 2}), CeilingError);
}

TEST_CASE("theorem-1 rejects hosts of the wrong order") {
    CHECK_THROWS_AS(extract_jahangir_theorem1(Graph::empty(10), 7, 3), std::invalid_argument);
}
