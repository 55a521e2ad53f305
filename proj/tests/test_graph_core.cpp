#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jramsey/canonical.hpp"
#include "jramsey/graph.hpp"

using namespace jramsey;

namespace {

Graph random_graph(int order, std::mt19937_64& rng, double p = 0.5) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(order, edges);
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("from_edges basics") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(p3 == Graph::path(3));
    CHECK(Graph::from_edges(1, {}) == Graph::complete(1));
    // duplicates collapse
    CHECK(Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(129, {}), std::invalid_argument);
}

TEST_CASE("graph invariants: symmetry, no loops, bits above order clear") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g = random_graph(n, rng);
        for (int v = 0; v < n; ++v) {
            CHECK_FALSE(g.has_edge(v, v));
            CHECK((g.row(v) & ~g.all_vertices()).none());
            for (int u = 0; u < n; ++u) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
        }
    }
}

TEST_CASE("standard families") {
    Graph j2 = Graph::jahangir(2);
    CHECK(j2.order() == 5);
    CHECK(j2.edge_count() == 6);
    // J_4 is isomorphic to K_{2,3}
    CHECK(canonical_form(j2) == canonical_form(Graph::complete_bipartite(2, 3)));

    Graph j3 = Graph::jahangir(3);
    CHECK(j3.order() == 7);
    CHECK(j3.edge_count() == 9);

    for (int m = 2; m <= 10; ++m) {
        Graph j = Graph::jahangir(m);
        CHECK(j.order() == 2 * m + 1);
        CHECK(j.edge_count() == 3 * m);
    }

    Graph u = Graph::union_of_completes({2, 6});
    CHECK(u.order() == 8);
    CHECK(u.edge_count() == 1 + 15);
    CHECK_FALSE(u.has_edge(0, 2));
    CHECK(u.largest_component_order() == 6);

    Graph w = Graph::wheel(5);
    CHECK(w.order() == 6);
    CHECK(w.degree(5) == 5);

    CHECK_THROWS_AS(Graph::jahangir(1), std::invalid_argument);
    CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(Graph::wheel(2), std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(Graph::complete(5).complement() == Graph::empty(5));
    Graph p4 = Graph::path(4);
    CHECK(p4.complement().complement() == p4);

    // complement of K_1 u K_7 is the star with center of degree 7
    Graph c = Graph::union_of_completes({1, 7}).complement();
    CHECK(c.degree(0) == 7);
    CHECK(c.edge_count() == 7);
    CHECK(canonical_form(c) == canonical_form(Graph::star(8)));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 30), rng);
        CHECK(g.complement().complement() == g);
    }
}

TEST_CASE("disjoint_union") {
    Graph w = disjoint_union(Graph::complete(1), Graph::complete(7));
    CHECK(w == Graph::union_of_completes({1, 7}));
    Graph two_p4 = disjoint_union(Graph::path(4), Graph::path(4));
    CHECK(two_p4.order() == 8);
    CHECK(two_p4.edge_count() == 6);
    CHECK_FALSE(two_p4.has_edge(3, 4));
    CHECK_THROWS_AS(disjoint_union(Graph::complete(100), Graph::complete(29)),
                    std::invalid_argument);
}

TEST_CASE("neighbors_in") {
    Graph p4 = Graph::path(4);
    Bits128 a;
    a.set(0);
    a.set(2);
    a.set(3);
    Bits128 r = p4.neighbors_in(1, a);
    CHECK(r.test(0));
    CHECK(r.test(2));
    CHECK_FALSE(r.test(3));
    CHECK(r.count() == 2);

    Bits128 small;
    small.set(1);
    small.set(2);
    CHECK(Graph::complete(5).neighbors_in(0, small).count() == 2);
    CHECK(Graph::empty(5).neighbors_in(0, Bits128::low(5)).none());
    CHECK_THROWS_AS(p4.neighbors_in(4, a), std::invalid_argument);

    // symmetry: y in N_A(x) iff x in N(y)
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(10, rng);
        for (int x = 0; x < 10; ++x) {
            Bits128 nb = g.neighbors_in(x, Bits128::low(10));
            CHECK((nb & ~Bits128::low(10)).none());
            for_each_bit(nb, [&](int y) { CHECK(g.has_edge(y, x)); });
        }
    }
}

TEST_CASE("largest_component_order") {
    CHECK(Graph::union_of_completes({2, 6}).largest_component_order() == 6);
    CHECK(Graph::jahangir(3).largest_component_order() == 7);
    CHECK(Graph::empty(5).largest_component_order() == 1);
}

TEST_CASE("chromatic_number") {
    CHECK(chromatic_number(Graph::path(7)) == 2);
    CHECK(chromatic_number(Graph::complete(4)) == 4);
    CHECK(chromatic_number(Graph::jahangir(3)) == 2);  // bipartite
    CHECK(chromatic_number(Graph::cycle(5)) == 3);
    CHECK(chromatic_number(Graph::empty(6)) == 1);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            CHECK(chromatic_number(Graph::complete_bipartite(a, b)) == 2);
    CHECK_THROWS_AS(chromatic_number(Graph::complete(17)), CeilingError);
}

TEST_CASE("canonical_form examples") {
    Graph p3a = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Graph p3b = Graph::from_edges(3, {{1, 0}, {0, 2}});  // relabeled path
    CHECK(canonical_form(p3a) == canonical_form(p3b));
    CHECK(canonical_form(Graph::complete(3)) != canonical_form(p3a));
    CHECK_THROWS_AS(canonical_form(Graph::empty(13)), CeilingError);
}

TEST_CASE("canonical_form is relabeling-invariant") {
    std::mt19937_64 rng(42);
    for (int order = 2; order <= 9; ++order) {
        Graph g = random_graph(order, rng);
        CanonicalForm base = canonical_form(g);
        int trials = order == 8 ? 1000 : 150;
        for (int i = 0; i < trials; ++i) {
            Graph h = g.permuted(random_permutation(order, rng));
            CHECK(canonical_form(h) == base);
        }
    }
}

TEST_CASE("canonical_form separates non-isomorphic graphs") {
    // same degree sequence, different graphs: C_6 vs two triangles
    Graph c6 = Graph::cycle(6);
    Graph tt = Graph::union_of_completes({3, 3});
    CHECK(canonical_form(c6) != canonical_form(tt));
    // highly symmetric graphs terminate quickly
    CHECK(canonical_form(Graph::empty(12)) == canonical_form(Graph::complete(12).complement()));
    CHECK(canonical_form(Graph::complete(12)) != canonical_form(Graph::empty(12)));
}

TEST_CASE("make_standard dispatch") {
    CHECK(make_standard(standard_kind_from_string("jahangir"), {3}) == Graph::jahangir(3));
    CHECK(make_standard(standard_kind_from_string("union_of_completes"), {2, 6}) ==
          Graph::union_of_completes({2, 6}));
    CHECK_THROWS_AS(standard_kind_from_string("petersen"), std::invalid_argument);
    CHECK_THROWS_AS(make_standard(StandardKind::Path, {1, 2}), std::invalid_argument);
}
