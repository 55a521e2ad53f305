#include "jramsey/detect.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace jramsey {

namespace {

std::vector<std::uint64_t> low_rows(const Graph& g) {
    std::vector<std::uint64_t> rows(g.order());
    for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v).lo;
    return rows;
}

std::uint64_t closure(const std::vector<std::uint64_t>& rows, int v, std::uint64_t mask) {
    std::uint64_t reach = std::uint64_t{1} << v;
    for (;;) {
        std::uint64_t grown = reach;
        std::uint64_t f = reach;
        while (f) {
            int u = std::countr_zero(f);
            f &= f - 1;
            grown |= rows[u] & mask;
        }
        if (grown == reach) return reach;
        reach = grown;
    }
}

// Swap of u,w is an automorphism of the subgraph induced on `scope`.
bool swap_ok(const std::vector<std::uint64_t>& rows, int u, int w, std::uint64_t scope) {
    std::uint64_t diff = (rows[u] ^ rows[w]) & scope;
    diff &= ~(std::uint64_t{1} << u);
    diff &= ~(std::uint64_t{1} << w);
    return diff == 0;
}

struct PathEnum {
    const std::vector<std::uint64_t>& rows;
    int target;
    std::uint64_t allowed;
    std::vector<int> seq;
    std::function<bool(const std::vector<int>&)> cb;  // true = stop

    bool emit() {
        // reversal dedup; the lex-min path always starts at its smaller end
        if (target >= 2 && seq.front() > seq.back()) return false;
        return cb(seq);
    }

    bool dfs(int v, std::uint64_t used) {
        if (static_cast<int>(seq.size()) == target) return emit();
        std::uint64_t cand = rows[v] & allowed & ~used;
        int tried[64];
        int ntried = 0;
        std::uint64_t c = cand;
        while (c) {
            int u = std::countr_zero(c);
            c &= c - 1;
            bool dup = false;
            for (int i = 0; i < ntried; ++i)
                if (swap_ok(rows, tried[i], u, allowed)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried[ntried++] = u;
            int need = target - static_cast<int>(seq.size());
            if (std::popcount(closure(rows, u, allowed & ~used)) < need) continue;
            seq.push_back(u);
            if (dfs(u, used | (std::uint64_t{1} << u))) return true;
            seq.pop_back();
        }
        return false;
    }

    bool run() {
        if (target <= 0) return false;
        int tried[64];
        int ntried = 0;
        std::uint64_t c = allowed;
        while (c) {
            int s = std::countr_zero(c);
            c &= c - 1;
            bool dup = false;
            for (int i = 0; i < ntried; ++i)
                if (swap_ok(rows, tried[i], s, allowed)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried[ntried++] = s;
            if (std::popcount(closure(rows, s, allowed)) < target) continue;
            seq.assign(1, s);
            if (static_cast<int>(seq.size()) == target) {
                if (emit()) return true;
                continue;
            }
            if (dfs(s, std::uint64_t{1} << s)) return true;
        }
        return false;
    }
};

struct MaxPathSearch {
    const std::vector<std::uint64_t>& rows;
    std::uint64_t allowed;
    int best = 0;

    void dfs(int v, std::uint64_t used, int len) {
        best = std::max(best, len);
        std::uint64_t cand = rows[v] & allowed & ~used;
        int tried[64];
        int ntried = 0;
        std::uint64_t c = cand;
        while (c) {
            int u = std::countr_zero(c);
            c &= c - 1;
            bool dup = false;
            for (int i = 0; i < ntried; ++i)
                if (swap_ok(rows, tried[i], u, allowed)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried[ntried++] = u;
            if (len + std::popcount(closure(rows, u, allowed & ~used)) <= best) continue;
            dfs(u, used | (std::uint64_t{1} << u), len + 1);
        }
    }

    int run() {
        int tried[64];
        int ntried = 0;
        std::uint64_t c = allowed;
        while (c) {
            int s = std::countr_zero(c);
            c &= c - 1;
            bool dup = false;
            for (int i = 0; i < ntried; ++i)
                if (swap_ok(rows, tried[i], s, allowed)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried[ntried++] = s;
            if (std::popcount(closure(rows, s, allowed)) <= best) continue;
            dfs(s, std::uint64_t{1} << s, 1);
        }
        return best;
    }
};

void check_path_ceiling(const Graph& g) {
    if (g.order() > 24) throw CeilingError("exact path search ceiling is order 24");
}

}  // namespace

std::optional<Embedding> find_path_in(const Graph& g, int n, Bits128 allowed) {
    if (g.order() > 64) throw CeilingError("path search supports order <= 64");
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    auto rows = low_rows(g);
    std::uint64_t mask = allowed.lo & g.all_vertices().lo;
    if (std::popcount(mask) < n) return std::nullopt;
    std::optional<Embedding> result;
    PathEnum pe{rows, n, mask, {}, [&](const std::vector<int>& seq) {
                    result = Embedding{seq};
                    return true;
                }};
    pe.run();
    return result;
}

std::vector<int> longest_path(const Graph& g) {
    check_path_ceiling(g);
    auto rows = low_rows(g);
    MaxPathSearch ms{rows, g.all_vertices().lo};
    int best = ms.run();
    auto path = find_path_in(g, best, g.all_vertices());
    return path->map;
}

std::optional<Embedding> contains_path(const Graph& g, int n) {
    check_path_ceiling(g);
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    if (n > g.order()) return std::nullopt;
    return find_path_in(g, n, g.all_vertices());
}

namespace {

bool disjoint_paths_rec(const std::vector<std::uint64_t>& rows, std::uint64_t avail, int k,
                        int n, std::vector<Embedding>& out) {
    if (k == 0) return true;
    if (std::popcount(avail) < k * n) return false;
    bool found = false;
    PathEnum pe{rows, n, avail, {}, [&](const std::vector<int>& seq) {
                    std::uint64_t used = 0;
                    for (int v : seq) used |= std::uint64_t{1} << v;
                    out.push_back(Embedding{seq});
                    if (disjoint_paths_rec(rows, avail & ~used, k - 1, n, out)) {
                        found = true;
                        return true;
                    }
                    out.pop_back();
                    return false;
                }};
    pe.run();
    return found;
}

}  // namespace

std::optional<std::vector<Embedding>> contains_disjoint_paths(const Graph& g, int k, int n) {
    check_path_ceiling(g);
    if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1 and n >= 1");
    if (k * n > g.order()) return std::nullopt;
    auto rows = low_rows(g);
    std::vector<Embedding> out;
    if (disjoint_paths_rec(rows, g.all_vertices().lo, k, n, out)) return out;
    return std::nullopt;
}

namespace {

bool swap_ok128(const Graph& g, int u, int w) {
    Bits128 diff = g.row(u) ^ g.row(w);
    diff.reset(u);
    diff.reset(w);
    return diff.none();
}

struct MonoSearch {
    const Graph& pat;
    const Graph& host;
    Bits128 scope;
    std::vector<int> order;                 // pattern vertices, assignment order
    std::vector<std::vector<int>> earlier;  // indices into order: mapped neighbors
    std::vector<Bits128> deg_ok;            // per order position
    std::vector<int> map_by_pos;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    bool dfs(size_t i, Bits128 used) {
        if (i == order.size()) return true;
        Bits128 cand = deg_ok[i] & ~used;
        for (int j : earlier[i]) cand = cand & host.row(map_by_pos[j]);
        int tried[128];
        int ntried = 0;
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            if (++nodes > budget) {
                exhausted = true;
                return false;
            }
            bool dup = false;
            for (int t = 0; t < ntried; ++t)
                if (swap_ok128(host, tried[t], v)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried[ntried++] = v;
            map_by_pos[i] = v;
            Bits128 u2 = used;
            u2.set(v);
            if (dfs(i + 1, u2)) return true;
            if (exhausted) return false;
        }
        return false;
    }
};

MonoResult run_mono(const Graph& pattern, const Graph& host, std::optional<Bits128> restrict_to,
                    std::uint64_t budget, int root) {
    int np = pattern.order();
    if (np > host.order()) return {SearchStatus::Absent, {}};
    Bits128 scope = restrict_to ? (*restrict_to & host.all_vertices()) : host.all_vertices();

    // Assignment order: root, then greedily most-connected to what is placed.
    if (root < 0) {
        root = 0;
        for (int v = 1; v < np; ++v)
            if (pattern.degree(v) > pattern.degree(root)) root = v;
    }
    std::vector<int> order{root};
    Bits128 placed = Bits128::bit(root);
    while (static_cast<int>(order.size()) < np) {
        int pick = -1, pick_conn = -1;
        for (int v = 0; v < np; ++v) {
            if (placed.test(v)) continue;
            int conn = (pattern.row(v) & placed).count();
            if (pick == -1 || conn > pick_conn ||
                (conn == pick_conn && pattern.degree(v) > pattern.degree(pick))) {
                pick = v;
                pick_conn = conn;
            }
        }
        order.push_back(pick);
        placed.set(pick);
    }

    MonoSearch s{pattern, host, scope, order, {}, {}, std::vector<int>(np, -1), budget};
    s.earlier.resize(np);
    s.deg_ok.resize(np);
    for (int i = 0; i < np; ++i) {
        for (int j = 0; j < i; ++j)
            if (pattern.has_edge(order[i], order[j])) s.earlier[i].push_back(j);
        Bits128 ok;
        for (int v = 0; v < host.order(); ++v)
            if (scope.test(v) && host.degree(v) >= pattern.degree(order[i])) ok.set(v);
        s.deg_ok[i] = ok;
    }

    if (s.dfs(0, {})) {
        Embedding e;
        e.map.assign(np, -1);
        for (int i = 0; i < np; ++i) e.map[order[i]] = s.map_by_pos[i];
        return {SearchStatus::Found, e};
    }
    return {s.exhausted ? SearchStatus::BudgetExhausted : SearchStatus::Absent, {}};
}

}  // namespace

MonoResult find_monomorphism_budgeted(const Graph& pattern, const Graph& host,
                                      std::optional<Bits128> restrict_to,
                                      std::uint64_t node_budget) {
    return run_mono(pattern, host, restrict_to, node_budget, -1);
}

std::optional<Embedding> find_monomorphism(const Graph& pattern, const Graph& host,
                                           std::optional<Bits128> restrict_to) {
    auto r = run_mono(pattern, host, restrict_to, ~std::uint64_t{0}, -1);
    if (r.status == SearchStatus::Found) return r.embedding;
    return std::nullopt;
}

std::optional<JahangirEmbedding> contains_jahangir(const Graph& g, int m) {
    if (m < 2) throw std::invalid_argument("jahangir needs m >= 2");
    if (g.order() < 2 * m + 1) throw std::invalid_argument("host too small for J_{2m}");
    Graph pattern = Graph::jahangir(m);
    auto r = run_mono(pattern, g, std::nullopt, ~std::uint64_t{0}, 2 * m);
    if (r.status != SearchStatus::Found) return std::nullopt;
    JahangirEmbedding je;
    je.hub = r.embedding.map[2 * m];
    je.cycle.assign(r.embedding.map.begin(), r.embedding.map.begin() + 2 * m);
    return je;
}

}  // namespace jramsey
