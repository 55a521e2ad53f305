#include "jramsey/graph6.hpp"

#include <sstream>
#include <stdexcept>

namespace jramsey {

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte outside 63..126");
    int n = text[0] - 63;
    if (n < 1 || n > 62) throw std::invalid_argument("graph6: unsupported order");
    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (text.size() != 1 + nbytes) throw std::invalid_argument("graph6: bad length");

    std::vector<std::pair<int, int>> edges;
    size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int b = (text[1 + bit / 6] - 63) >> (5 - bit % 6) & 1;
            if (b) edges.emplace_back(u, v);
        }
    // padding bits must be zero
    for (size_t p = nbits; p < nbytes * 6; ++p)
        if ((text[1 + p / 6] - 63) >> (5 - p % 6) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw CeilingError("graph6 emitter supports order <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

std::string describe_graph(const Graph& g) {
    if (g.order() <= 62) return emit_graph6(g);
    std::ostringstream os;
    os << "n=" << g.order() << ";edges=";
    bool first = true;
    for (int u = 0; u < g.order(); ++u)
        for_each_bit(g.row(u), [&](int v) {
            if (u < v) {
                if (!first) os << ',';
                os << u << '-' << v;
                first = false;
            }
        });
    return os.str();
}

}  // namespace jramsey
