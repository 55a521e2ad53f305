#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jramsey/bits.hpp"

namespace jramsey {

// Thrown when an operation is asked to exceed its exact-search ceiling.
struct CeilingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph, adjacency as 128-bit rows.
class Graph {
public:
    static constexpr int kMaxOrder = 128;

    static Graph empty(int order);
    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph star(int n);           // center 0, n-1 leaves
    static Graph wheel(int m);          // C_m plus hub m adjacent to all
    static Graph jahangir(int m);       // C_{2m} (vertices 0..2m-1) plus hub 2m on even spokes
    static Graph union_of_completes(const std::vector<int>& sizes);

    int order() const { return order_; }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    Bits128 row(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    long edge_count() const;
    Bits128 all_vertices() const { return Bits128::low(order_); }

    Graph complement() const;
    Bits128 neighbors_in(int x, Bits128 a) const;
    int largest_component_order() const;

    // New graph with one extra vertex whose neighborhood is nbrs.
    Graph with_vertex(Bits128 nbrs) const;
    // Relabel: vertex v becomes perm[v].
    Graph permuted(const std::vector<int>& perm) const;

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    Graph(int order) : order_(order), adj_(order) {}
    void add_edge(int u, int v) {
        adj_[u].set(v);
        adj_[v].set(u);
    }

    int order_;
    std::vector<Bits128> adj_;
};

Graph disjoint_union(const Graph& g, const Graph& h);

// Exact chromatic number, order <= 16.
int chromatic_number(const Graph& g);

enum class StandardKind {
    Empty,
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Wheel,
    Jahangir,
    UnionOfCompletes,
};

StandardKind standard_kind_from_string(const std::string& name);
Graph make_standard(StandardKind kind, const std::vector<int>& params);

}  // namespace jramsey
