#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jramsey/detect.hpp"
#include "jramsey/graph.hpp"
#include "jramsey/ramsey.hpp"

namespace jramsey {

// Audit record tying an extraction to the longest-path case analysis.
struct CaseTrace {
    std::string subcase;        // "1.1","1.2","2.1".."2.5","T2-C1","T2-C2","fallback"
    std::vector<int> L;         // longest path x_1..x_t
    std::vector<int> Y;         // off-path vertices
    std::vector<int> A;
    std::vector<int> B;
    std::vector<int> D1;
    std::vector<int> D2;
    std::optional<int> b;
    std::optional<int> v1;
};

// Raised when a proof-guided extraction finds no embedding even unrestricted;
// carries the offending host for the falsification record.
struct FalsificationError : std::runtime_error {
    std::string graph6;
    CaseTrace trace;
    FalsificationError(const std::string& msg, std::string g6, CaseTrace t)
        : std::runtime_error(msg), graph6(std::move(g6)), trace(std::move(t)) {}
};

// Independent certifier; shares no code with the searchers.
bool validate_embedding(const Graph& pattern, const Graph& host, const Embedding& e);
bool validate_jahangir_embedding(const Graph& host, int m, const JahangirEmbedding& e);

struct JahangirExtraction {
    JahangirEmbedding embedding;
    CaseTrace trace;
};

// Longest-path case analysis for m in {3,4,5}: a certified J_{2m} embedding
// in complement(F) for any P_n-free F of order n+m-1.
JahangirExtraction extract_jahangir_theorem1(const Graph& f, int n, int m);

// Order-9 analysis for 2P_4-free hosts: certified J_4 in the complement.
JahangirExtraction extract_j4_theorem2_base(const Graph& f);

// Inductive peeling: k vertex-disjoint P_n embeddings in a host of order
// k*n+m-1 whose complement is J_{2m}-free.
std::vector<Embedding> extract_k_paths(const Graph& f, const RamseyInstance& inst);

}  // namespace jramsey
