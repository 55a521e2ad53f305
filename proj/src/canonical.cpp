#include "jramsey/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace jramsey {

namespace {

constexpr std::uint32_t kInf = 0xFFFFFFFFu;

// Column of v at position p: adjacency to the placed vertices, earliest placed
// position most significant.
std::uint32_t column_bits(const Graph& g, int v, const int* placed, int p) {
    std::uint32_t col = 0;
    Bits128 row = g.row(v);
    for (int j = 0; j < p; ++j) col = (col << 1) | (row.test(placed[j]) ? 1u : 0u);
    return col;
}

// Swapping u and v is an automorphism iff their rows agree off {u,v}.
bool swap_is_automorphism(const Graph& g, int u, int v) {
    Bits128 diff = g.row(u) ^ g.row(v);
    diff.reset(u);
    diff.reset(v);
    return diff.none();
}

// Equitable partition by iterated neighbor-color refinement; cell order is
// determined by invariant signatures, so it is preserved by isomorphisms.
std::vector<std::vector<int>> refined_cells(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, 0);
    int ncolors = 1;
    for (;;) {
        // signature = (own color, count of neighbors in each color)
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s(1 + ncolors, 0);
            s[0] = color[v];
            for_each_bit(g.row(v), [&](int u) { s[1 + color[u]]++; });
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sig) rank.emplace(s, 0);
        int idx = 0;
        for (auto& [s, r] : rank) r = idx++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            int c = rank[sig[v].first];
            if (c != color[v]) changed = true;
            color[v] = c;
        }
        ncolors = idx;
        if (!changed) break;
    }
    std::vector<std::vector<int>> cells(ncolors);
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    cells.erase(std::remove_if(cells.begin(), cells.end(),
                               [](const std::vector<int>& c) { return c.empty(); }),
                cells.end());
    return cells;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> cell_of_pos;             // which cell supplies each position
    std::vector<std::vector<int>> cells;
    std::vector<std::uint32_t> best;          // best column per position
    std::array<int, 16> placed{};
    Bits128 used;

    void dfs(int p) {
        if (p == n) return;
        const auto& cell = cells[cell_of_pos[p]];
        std::array<int, 16> tried{};
        int ntried = 0;
        for (int v : cell) {
            if (used.test(v)) continue;
            bool dup = false;
            for (int i = 0; i < ntried; ++i)
                if (swap_is_automorphism(g, tried[i], v)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried[ntried++] = v;
            std::uint32_t col = column_bits(g, v, placed.data(), p);
            if (col > best[p]) continue;
            if (col < best[p]) {
                best[p] = col;
                for (int q = p + 1; q < n; ++q) best[q] = kInf;
            }
            placed[p] = v;
            used.set(v);
            dfs(p + 1);
            used.reset(v);
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > 12) throw CeilingError("canonical_form ceiling is order 12");
    int n = g.order();
    CanonSearch s{g, n, {}, refined_cells(g), std::vector<std::uint32_t>(n, kInf), {}, {}};
    for (size_t c = 0; c < s.cells.size(); ++c)
        for (size_t i = 0; i < s.cells[c].size(); ++i) s.cell_of_pos.push_back(static_cast<int>(c));
    s.best[0] = 0;  // position 0 has an empty column
    s.dfs(0);

    CanonicalForm form;
    form.bytes.push_back(static_cast<std::uint8_t>(n));
    std::uint8_t acc = 0;
    int nbits = 0;
    for (int p = 1; p < n; ++p)
        for (int j = p - 1; j >= 0; --j) {
            acc = static_cast<std::uint8_t>((acc << 1) | ((s.best[p] >> j) & 1u));
            if (++nbits == 8) {
                form.bytes.push_back(acc);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) form.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    return form;
}

namespace {

// Explore orderings against the identity labeling's columns; false as soon as
// a strictly smaller string exists.
bool canonical_rec(const Graph& g, int p, int* placed, Bits128& used,
                   const std::uint32_t* ref) {
    int n = g.order();
    if (p == n) return true;
    std::array<int, 16> tried{};
    int ntried = 0;
    for (int v = 0; v < n; ++v) {
        if (used.test(v)) continue;
        bool dup = false;
        for (int i = 0; i < ntried; ++i)
            if (swap_is_automorphism(g, tried[i], v)) {
                dup = true;
                break;
            }
        if (dup) continue;
        tried[ntried++] = v;
        std::uint32_t col = column_bits(g, v, placed, p);
        if (col > ref[p]) continue;
        if (col < ref[p]) return false;
        placed[p] = v;
        used.set(v);
        bool ok = canonical_rec(g, p + 1, placed, used, ref);
        used.reset(v);
        if (!ok) return false;
    }
    return true;
}

}  // namespace

bool is_canonical_labeled(const Graph& g) {
    int n = g.order();
    if (n > 12) throw CeilingError("is_canonical_labeled ceiling is order 12");
    std::array<std::uint32_t, 16> ref{};
    std::array<int, 16> idx{};
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int p = 0; p < n; ++p) ref[p] = column_bits(g, p, idx.data(), p);
    std::array<int, 16> placed{};
    Bits128 used;
    return canonical_rec(g, 0, placed.data(), used, ref.data());
}

}  // namespace jramsey
