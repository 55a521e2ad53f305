#include "jramsey/extract.hpp"

#include <algorithm>

#include "jramsey/graph6.hpp"

namespace jramsey {

bool validate_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
    if (static_cast<int>(e.map.size()) != pattern.order()) return false;
    Bits128 image;
    for (int v : e.map) {
        if (v < 0 || v >= host.order()) return false;
        if (image.test(v)) return false;  // not injective
        image.set(v);
    }
    for (int u = 0; u < pattern.order(); ++u)
        for (int v = u + 1; v < pattern.order(); ++v)
            if (pattern.has_edge(u, v) && !host.has_edge(e.map[u], e.map[v])) return false;
    return true;
}

bool validate_jahangir_embedding(const Graph& host, int m, const JahangirEmbedding& e) {
    if (m < 2 || static_cast<int>(e.cycle.size()) != 2 * m) return false;
    Bits128 image;
    if (e.hub < 0 || e.hub >= host.order()) return false;
    image.set(e.hub);
    for (int v : e.cycle) {
        if (v < 0 || v >= host.order()) return false;
        if (image.test(v)) return false;
        image.set(v);
    }
    for (int i = 0; i < 2 * m; ++i)
        if (!host.has_edge(e.cycle[i], e.cycle[(i + 1) % (2 * m)])) return false;
    for (int i = 0; i < 2 * m; i += 2)
        if (!host.has_edge(e.hub, e.cycle[i])) return false;
    return true;
}

namespace {

std::vector<int> to_vec(Bits128 s) {
    std::vector<int> out;
    for_each_bit(s, [&](int v) { out.push_back(v); });
    return out;
}

Bits128 to_bits(const std::vector<int>& vs) {
    Bits128 s;
    for (int v : vs) s.set(v);
    return s;
}

// Lexicographically smallest `count` members (all of them if fewer).
std::vector<int> take(Bits128 s, int count) {
    std::vector<int> out;
    for (int v = s.first(); v >= 0 && count > 0; v = s.next(v), --count) out.push_back(v);
    return out;
}

void append(std::vector<int>& dst, const std::vector<int>& src) {
    for (int v : src)
        if (std::find(dst.begin(), dst.end(), v) == dst.end()) dst.push_back(v);
}

JahangirEmbedding to_jahangir(const Embedding& e, int m) {
    JahangirEmbedding je;
    je.hub = e.map[2 * m];
    je.cycle.assign(e.map.begin(), e.map.begin() + 2 * m);
    return je;
}

// Restricted proof-guided search with the unrestricted safety net.
JahangirExtraction attempt(const Graph& f, int m, CaseTrace trace,
                           const std::vector<int>& d1, const std::vector<int>& d2,
                           const std::string& label) {
    trace.subcase = label;
    trace.D1 = d1;
    trace.D2 = d2;
    Graph comp = f.complement();
    Graph pattern = Graph::jahangir(m);
    if (!d1.empty() || !d2.empty()) {
        Bits128 scope = to_bits(d1) | to_bits(d2);
        if (scope.count() >= 2 * m + 1) {
            if (auto e = find_monomorphism(pattern, comp, scope))
                return {to_jahangir(*e, m), trace};
        }
        trace.subcase = "fallback";
    }
    if (auto e = find_monomorphism(pattern, comp)) return {to_jahangir(*e, m), trace};
    throw FalsificationError("no J_{2m} in complement: theorem falsified on this host",
                             describe_graph(f), trace);
}

}  // namespace

JahangirExtraction extract_jahangir_theorem1(const Graph& f, int n, int m) {
    if (m < 3 || m > 5) throw std::invalid_argument("extract_jahangir_theorem1 needs m in {3,4,5}");
    if (n < 2 * m + 1) throw std::invalid_argument("needs n >= 2m+1");
    if (f.order() != n + m - 1)
        throw std::invalid_argument("host order must be n+m-1 = " + std::to_string(n + m - 1));
    if (contains_path(f, n)) throw std::invalid_argument("host contains P_n");

    CaseTrace trace;
    trace.L = longest_path(f);
    int t = static_cast<int>(trace.L.size());
    Bits128 lbits = to_bits(trace.L);
    Bits128 ybits = f.all_vertices() & ~lbits;
    trace.Y = to_vec(ybits);
    auto x = [&](int i) { return trace.L[i - 1]; };  // paper's 1-based x_i

    if (t >= 2 * m) {
        // Case 1: A = first 2m-2 vertices after x_1, B = m vertices of Y.
        std::vector<int> a(trace.L.begin() + 1, trace.L.begin() + 2 * m - 1);
        std::vector<int> b_set = take(ybits, m);
        trace.A = a;
        trace.B = b_set;
        Bits128 abits = to_bits(a);
        Bits128 bbits = to_bits(b_set);

        int b = -1;
        for (int y : b_set)
            if (f.neighbors_in(y, abits).count() >= m - 1) {
                b = y;
                break;
            }
        if (b >= 0) {
            // Subcase 1.1
            trace.b = b;
            Bits128 a1 = abits & ~f.neighbors_in(b, abits);
            int v1 = -1, best_deg = -1;
            for_each_bit(a1, [&](int w) {
                int d = f.neighbors_in(w, bbits).count();
                if (d > best_deg) {
                    best_deg = d;
                    v1 = w;
                }
            });
            trace.v1 = v1;
            std::vector<int> d1{x(1), x(t), b};
            Bits128 rest = a1;
            rest.reset(v1);
            append(d1, to_vec(rest));
            std::vector<int> d2{v1};
            for (int y : b_set)
                if (y != b) d2.push_back(y);
            return attempt(f, m, trace, d1, d2, "1.1");
        }
        // Subcase 1.2: m-1 vertices of A with the fewest neighbors in B.
        std::vector<int> by_deg = a;
        std::stable_sort(by_deg.begin(), by_deg.end(), [&](int p, int q) {
            return f.neighbors_in(p, bbits).count() < f.neighbors_in(q, bbits).count();
        });
        std::vector<int> d1{x(1), x(t)};
        d1.insert(d1.end(), by_deg.begin(), by_deg.begin() + (m - 1));
        return attempt(f, m, trace, d1, b_set, "1.2");
    }

    // Case 2: 1 <= t <= 2m-1
    if (t <= 3) return attempt(f, m, trace, {}, {}, "2.1");

    Bits128 ny_x2 = f.neighbors_in(x(2), ybits);
    int s = ny_x2.count();
    auto rest_of_y = [&](Bits128 exclude, int count) {
        return take(ybits & ~exclude, count);
    };

    if (t <= m + 1 || t == m + 2) {
        const bool is23 = (t == m + 2);
        const char* label = is23 ? "2.3" : "2.2";
        std::vector<int> d1, d2;
        if (s >= m - 2) {
            std::vector<int> picked = take(ny_x2, m - 2);
            if (is23 && f.has_edge(x(3), x(t))) {
                d1 = {x(1), x(t), x(4)};
                append(d1, picked);
                d2 = rest_of_y(to_bits(d1), m);
            } else if (is23) {
                d1 = {x(1), x(t)};
                append(d1, picked);
                d2 = {x(3)};
                append(d2, rest_of_y(to_bits(d1), m));
            } else {
                d1 = {x(1), x(t)};
                append(d1, picked);
                d2 = rest_of_y(to_bits(d1), m + 1);
            }
        } else if (s == m - 3) {
            d1 = {x(1), x(t), x(2)};
            append(d1, to_vec(ny_x2));
            d2 = rest_of_y(ny_x2, m + 1);
        } else if (s == m - 4) {
            d1 = {x(1), x(t), x(2), x(t - 1)};
            append(d1, to_vec(ny_x2));
            Bits128 ok = ybits & ~ny_x2 & ~f.row(x(t - 1));
            d2 = take(ok, m + 1);
        } else {  // s <= m-5, only m = 5
            int b = -1;
            // distance two from x_3 first, then a smallest-degree Y vertex
            Bits128 nx3 = f.row(x(3));
            Bits128 dist2;
            for_each_bit(nx3, [&](int w) { dist2 = dist2 | f.row(w); });
            dist2 = dist2 & ~nx3 & f.all_vertices();
            dist2.reset(x(3));
            if (dist2.any()) b = dist2.first();
            if (b < 0) {
                int best = f.order() + 1;
                for_each_bit(ybits, [&](int y) {
                    if (f.degree(y) < best) {
                        best = f.degree(y);
                        b = y;
                    }
                });
            }
            trace.b = b;
            d1 = {x(1), x(2), x(t - 1), x(t)};
            append(d1, {b});
            d2 = rest_of_y(to_bits(d1), m + 1);
        }
        return attempt(f, m, trace, d1, d2, label);
    }

    if (t == m + 3) {
        // Subcase 2.4 (covers |L| = 2m-1 for m=4 and 2m-2 for m=5)
        std::vector<int> d1, d2;
        if (s >= m - 1) {
            bool near_end = (f.row(x(t - 1)) & ny_x2).any();
            int b;
            if (near_end) b = x(t - 2);
            else if (!f.has_edge(x(t - 1), x(1))) b = x(t - 1);
            else b = x(t - 2);
            trace.b = b;
            d1 = {x(1)};
            append(d1, take(ny_x2, m - 1));
            d2 = {x(3), x(t), b};
            append(d2, rest_of_y(ny_x2 | to_bits(d2), m - 2));
        } else if (s == m - 2) {
            d1 = {x(1), x(2)};
            append(d1, to_vec(ny_x2));
            d2 = {x(3), x(t)};
            append(d2, rest_of_y(ny_x2, m - 1));
        } else if (s == m - 3) {
            d1 = {x(1), x(2), x(t)};
            append(d1, to_vec(ny_x2));
            d2 = {x(3)};
            append(d2, rest_of_y(ny_x2, m));
        } else if (s == m - 4) {
            Bits128 ny_xt1 = f.neighbors_in(x(t - 1), ybits);
            d1 = {x(1), x(2), x(t - 1), x(t)};
            append(d1, to_vec(ny_x2 | ny_xt1));
            d2 = to_vec(ybits & ~ny_x2 & ~ny_xt1);
        } else {  // s <= m-5, only m = 5
            int b = x(3);
            trace.b = b;
            d1 = {x(1), x(2), x(t - 1), x(t), b};
            d2 = rest_of_y(to_bits(d1), m + 1);
        }
        return attempt(f, m, trace, d1, d2, "2.4");
    }

    // t == 2m-1 with m == 5: Subcase 2.5
    {
        auto nonadj_to_all = [&](std::initializer_list<int> cands) -> int {
            for (int v : cands)
                if ((f.row(v) & ny_x2).none()) return v;
            return -1;
        };
        std::vector<int> d1, d2;
        if (s >= m - 2) {
            int b = nonadj_to_all({x(4), x(5)});
            int c = nonadj_to_all({x(6), x(7)});
            if (b < 0 || c < 0) return attempt(f, m, trace, {}, {}, "fallback");
            trace.b = b;
            d1 = {x(1), x(t)};
            append(d1, take(ny_x2, m - 2));
            d2 = {x(3), b, c};
            append(d2, rest_of_y(to_bits(d1) | to_bits(d2), m - 2));
        } else if (s == m - 3) {
            int b = nonadj_to_all({x(4), x(5)});
            if (b < 0) return attempt(f, m, trace, {}, {}, "fallback");
            trace.b = b;
            d1 = {x(1), x(2), x(t)};
            append(d1, to_vec(ny_x2));
            d2 = {x(3), b};
            append(d2, rest_of_y(ny_x2 | to_bits(d2), m - 1));
        } else if (s == m - 4) {
            Bits128 ny_xt1 = f.neighbors_in(x(t - 1), ybits);
            d1 = {x(1), x(2), x(t - 1), x(t)};
            append(d1, to_vec(ny_x2 | ny_xt1));
            d2 = {x(3)};
            append(d2, to_vec(ybits & ~ny_x2 & ~ny_xt1));
        } else {  // s == 0
            int b = f.neighbors_in(x(3), ybits).count() <= f.neighbors_in(x(4), ybits).count()
                        ? x(3)
                        : x(4);
            trace.b = b;
            d1 = {x(1), x(2), b, x(t - 1), x(t)};
            d2 = to_vec(ybits);
        }
        return attempt(f, m, trace, d1, d2, "2.5");
    }
}

JahangirExtraction extract_j4_theorem2_base(const Graph& f) {
    if (f.order() != 9) throw std::invalid_argument("host order must be 9");
    if (contains_disjoint_paths(f, 2, 4)) throw std::invalid_argument("host contains 2P_4");

    CaseTrace trace;
    trace.L = longest_path(f);
    int t = static_cast<int>(trace.L.size());
    Bits128 lbits = to_bits(trace.L);
    Bits128 abits = f.all_vertices() & ~lbits;  // the proof's A = V \ L
    trace.Y = to_vec(abits);
    trace.A = to_vec(abits);
    auto x = [&](int i) { return trace.L[i - 1]; };

    if (t != 7 || abits.count() != 2) {
        // |A| and |L| are forced; otherwise {x_1,x_k} with any 3 of A is K_{2,3}.
        std::vector<int> d1{x(1), x(t)};
        std::vector<int> d2 = take(abits, 3);
        return attempt(f, 2, trace, d1, d2, "T2-C1");
    }

    int y = abits.first();
    int z = abits.next(y);
    trace.b = y;
    Bits128 interior;  // x_2..x_6
    for (int i = 2; i <= 6; ++i) interior.set(x(i));

    Bits128 common = f.row(y) & f.row(z) & interior;
    if (common.any()) {
        // Case 1: a common neighbor x_i; one of x_{i-1},x_{i+1} is neither endpoint.
        int xi = common.first();
        int pos = 0;
        for (int i = 2; i <= 6; ++i)
            if (x(i) == xi) pos = i;
        int w = -1;
        for (int cand : {x(pos - 1), x(pos + 1)})
            if (cand != x(1) && cand != x(7)) {
                w = cand;
                break;
            }
        std::vector<int> d1{y, z};
        std::vector<int> d2{x(1), x(7), w};
        return attempt(f, 2, trace, d1, d2, "T2-C1");
    }

    // Case 2: some interior vertex misses both y and z, else L was not longest.
    Bits128 missed = interior & ~f.row(y) & ~f.row(z);
    if (missed.any()) {
        std::vector<int> d1{y, z};
        std::vector<int> d2{x(1), x(7), missed.first()};
        return attempt(f, 2, trace, d1, d2, "T2-C2");
    }
    return attempt(f, 2, trace, {}, {}, "fallback");
}

std::vector<Embedding> extract_k_paths(const Graph& f, const RamseyInstance& inst) {
    if (!claimed_value(inst)) throw std::invalid_argument("instance is out of every proven regime");
    if (inst.n > 24) throw CeilingError("extract_k_paths needs n <= 24");
    if (f.order() != inst.k * inst.n + inst.m - 1)
        throw std::invalid_argument("host order must be kn+m-1 = " +
                                    std::to_string(inst.k * inst.n + inst.m - 1));
    if (f.order() > 64) throw CeilingError("extract_k_paths supports order <= 64");
    if (f.order() >= 2 * inst.m + 1 && contains_jahangir(f.complement(), inst.m))
        throw std::invalid_argument("complement contains J_{2m}");

    std::vector<Embedding> out;
    Bits128 remaining = f.all_vertices();
    for (int i = 0; i < inst.k; ++i) {
        auto p = find_path_in(f, inst.n, remaining);
        if (!p)
            throw FalsificationError("no P_n at peeling stage " + std::to_string(i) +
                                         ": theorem falsified on this host",
                                     describe_graph(f), CaseTrace{});
        out.push_back(*p);
        remaining = remaining & ~to_bits(p->map);
    }
    return out;
}

}  // namespace jramsey
