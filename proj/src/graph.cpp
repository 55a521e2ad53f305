#include "jramsey/graph.hpp"

#include <algorithm>
#include <numeric>

namespace jramsey {

namespace {

void check_order(int order) {
    if (order < 1 || order > Graph::kMaxOrder)
        throw std::invalid_argument("graph order must be in 1..128, got " +
                                    std::to_string(order));
}

}  // namespace

Graph Graph::empty(int order) {
    check_order(order);
    return Graph(order);
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    check_order(order);
    Graph g(order);
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("edge endpoint out of range");
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::path(int n) {
    check_order(n);
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs order >= 3");
    check_order(n);
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph Graph::complete(int n) {
    check_order(n);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite sides must be >= 1");
    check_order(a + b);
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = a; j < a + b; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::star(int n) {
    check_order(n);
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

Graph Graph::wheel(int m) {
    if (m < 3) throw std::invalid_argument("wheel needs m >= 3");
    check_order(m + 1);
    Graph g(m + 1);
    for (int i = 0; i < m; ++i) {
        g.add_edge(i, (i + 1) % m);
        g.add_edge(i, m);
    }
    return g;
}

Graph Graph::jahangir(int m) {
    if (m < 2) throw std::invalid_argument("jahangir needs m >= 2");
    check_order(2 * m + 1);
    Graph g(2 * m + 1);
    for (int i = 0; i < 2 * m; ++i) g.add_edge(i, (i + 1) % (2 * m));
    for (int i = 0; i < 2 * m; i += 2) g.add_edge(i, 2 * m);
    return g;
}

Graph Graph::union_of_completes(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("union_of_completes needs at least one size");
    int total = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("clique size must be >= 1");
        total += s;
    }
    check_order(total);
    Graph g(total);
    int base = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) g.add_edge(base + i, base + j);
        base += s;
    }
    return g;
}

long Graph::edge_count() const {
    long d = 0;
    for (int v = 0; v < order_; ++v) d += degree(v);
    return d / 2;
}

Graph Graph::complement() const {
    Graph g(order_);
    Bits128 all = all_vertices();
    for (int v = 0; v < order_; ++v) {
        g.adj_[v] = ~adj_[v] & all;
        g.adj_[v].reset(v);
    }
    return g;
}

Bits128 Graph::neighbors_in(int x, Bits128 a) const {
    if (x < 0 || x >= order_) throw std::invalid_argument("vertex out of range");
    return adj_[x] & a & all_vertices();
}

int Graph::largest_component_order() const {
    Bits128 seen;
    int best = 0;
    for (int v = 0; v < order_; ++v) {
        if (seen.test(v)) continue;
        Bits128 comp = Bits128::bit(v);
        for (;;) {
            Bits128 grown = comp;
            for_each_bit(comp, [&](int u) { grown = grown | adj_[u]; });
            if (grown == comp) break;
            comp = grown;
        }
        best = std::max(best, comp.count());
        seen = seen | comp;
    }
    return best;
}

Graph Graph::with_vertex(Bits128 nbrs) const {
    check_order(order_ + 1);
    Graph g(order_ + 1);
    g.adj_ = adj_;
    g.adj_.push_back({});
    int w = order_;
    for_each_bit(nbrs & all_vertices(), [&](int u) { g.add_edge(u, w); });
    return g;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    Graph g(order_);
    for (int u = 0; u < order_; ++u)
        for_each_bit(adj_[u], [&](int v) {
            if (u < v) g.add_edge(perm[u], perm[v]);
        });
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.order() + h.order() > Graph::kMaxOrder)
        throw std::invalid_argument("disjoint_union exceeds maximum order 128");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for_each_bit(g.row(u), [&](int v) {
            if (u < v) edges.emplace_back(u, v);
        });
    int base = g.order();
    for (int u = 0; u < h.order(); ++u)
        for_each_bit(h.row(u), [&](int v) {
            if (u < v) edges.emplace_back(base + u, base + v);
        });
    return Graph::from_edges(g.order() + h.order(), edges);
}

namespace {

bool color_rec(const Graph& g, int k, const std::vector<int>& verts, size_t depth,
               std::vector<int>& color, int used) {
    if (depth == verts.size()) return true;
    int v = verts[depth];
    // Candidate colors capped at used+1 to kill color-permutation symmetry.
    int cap = std::min(k - 1, used);
    for (int c = 0; c <= cap; ++c) {
        bool ok = true;
        for_each_bit(g.row(v), [&](int u) {
            if (color[u] == c) ok = false;
        });
        if (!ok) continue;
        color[v] = c;
        if (color_rec(g, k, verts, depth + 1, color, std::max(used, c + 1))) return true;
        color[v] = -1;
    }
    return false;
}

bool k_colorable(const Graph& g, int k, const std::vector<int>& verts) {
    std::vector<int> color(g.order(), -1);
    return color_rec(g, k, verts, 0, color, 0);
}

}  // namespace

int chromatic_number(const Graph& g) {
    if (g.order() > 16) throw CeilingError("chromatic_number ceiling is order 16");
    if (g.edge_count() == 0) return 1;
    std::vector<int> verts(g.order());
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = 2; k < g.order(); ++k)
        if (k_colorable(g, k, verts)) return k;
    return g.order();
}

StandardKind standard_kind_from_string(const std::string& name) {
    if (name == "empty") return StandardKind::Empty;
    if (name == "path") return StandardKind::Path;
    if (name == "cycle") return StandardKind::Cycle;
    if (name == "complete") return StandardKind::Complete;
    if (name == "complete_bipartite") return StandardKind::CompleteBipartite;
    if (name == "star") return StandardKind::Star;
    if (name == "wheel") return StandardKind::Wheel;
    if (name == "jahangir") return StandardKind::Jahangir;
    if (name == "union_of_completes") return StandardKind::UnionOfCompletes;
    throw std::invalid_argument("unknown graph family: " + name);
}

Graph make_standard(StandardKind kind, const std::vector<int>& params) {
    auto one = [&]() {
        if (params.size() != 1) throw std::invalid_argument("family takes one parameter");
        return params[0];
    };
    switch (kind) {
        case StandardKind::Empty: return Graph::empty(one());
        case StandardKind::Path: return Graph::path(one());
        case StandardKind::Cycle: return Graph::cycle(one());
        case StandardKind::Complete: return Graph::complete(one());
        case StandardKind::CompleteBipartite:
            if (params.size() != 2)
                throw std::invalid_argument("complete_bipartite takes two parameters");
            return Graph::complete_bipartite(params[0], params[1]);
        case StandardKind::Star: return Graph::star(one());
        case StandardKind::Wheel: return Graph::wheel(one());
        case StandardKind::Jahangir: return Graph::jahangir(one());
        case StandardKind::UnionOfCompletes: return Graph::union_of_completes(params);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace jramsey
