#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jramsey/graph.hpp"

namespace jramsey {

// Injective vertex map, pattern vertex i -> map[i]; every pattern edge lands
// on a host edge (subgraph containment, not induced).
struct Embedding {
    std::vector<int> map;
};

// Hub plus the 2m cycle vertices in cyclic order; hub is adjacent to the
// even cycle positions in the host.
struct JahangirEmbedding {
    int hub = -1;
    std::vector<int> cycle;
};

// Maximum-length path, ties broken by lexicographically smallest sequence.
// Exact search, order <= 24.
std::vector<int> longest_path(const Graph& g);

std::optional<Embedding> contains_path(const Graph& g, int n);

std::optional<std::vector<Embedding>> contains_disjoint_paths(const Graph& g, int k, int n);

std::optional<Embedding> find_monomorphism(const Graph& pattern, const Graph& host,
                                           std::optional<Bits128> restrict_to = std::nullopt);

std::optional<JahangirEmbedding> contains_jahangir(const Graph& g, int m);

// Budgeted variant for sampling regimes where exactness is optional.
enum class SearchStatus { Found, Absent, BudgetExhausted };
struct MonoResult {
    SearchStatus status = SearchStatus::Absent;
    Embedding embedding;
};
MonoResult find_monomorphism_budgeted(const Graph& pattern, const Graph& host,
                                      std::optional<Bits128> restrict_to,
                                      std::uint64_t node_budget);

// Lex-first P_n inside the allowed vertex set; exact, host order <= 64.
// Used by the extractors, which may run above the public ceiling of 24.
std::optional<Embedding> find_path_in(const Graph& g, int n, Bits128 allowed);

}  // namespace jramsey
