#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jramsey/enumerate.hpp"
#include "jramsey/graph.hpp"

namespace jramsey {

// The pair (kP_n, J_{2m}).
struct RamseyInstance {
    int k = 1;
    int n = 2;
    int m = 2;

    RamseyInstance(int k_, int n_, int m_) : k(k_), n(n_), m(m_) {
        if (k < 1 || n < 2 || m < 2)
            throw std::invalid_argument("RamseyInstance needs k>=1, n>=2, m>=2");
    }
};

struct VerificationReport {
    RamseyInstance instance{1, 2, 2};
    int order = 0;
    std::uint64_t classes_total = 0;
    std::uint64_t classes_failed = 0;
    std::vector<std::string> counterexamples;  // graph6
    std::vector<std::string> witnesses;        // graph6, lower-bound runs
    double elapsed_ms = 0.0;
    std::string checkpoint_path;
    // sampling runs only
    std::uint64_t trials = 0;
    std::uint64_t confirmed_pass = 0;
    std::uint64_t inconclusive = 0;
    std::uint64_t seed = 0;
};

// Piecewise theorem table; nullopt = outside every proven regime.
std::optional<int> claimed_value(const RamseyInstance& inst);

// (chi(G)-1)(c(H)-1)+1; |G| <= 16.
int chvatal_harary_bound(const Graph& g, const Graph& h);

// Signals that the generic K_{m-1} u K_{kn-1} witness is smaller than R-1,
// which happens only at (k,n,m)=(1,4,2).
struct WitnessUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph build_lower_witness(const RamseyInstance& inst);

bool verify_witness(const Graph& f, const RamseyInstance& inst);

// Exhaustive check over all isomorphism classes of the given order. A class
// fails iff it contains neither kP_n nor J_{2m} in its complement.
// stop_after_classes > 0 interrupts each shard once it has seen that many
// classes (at a root boundary), leaving the checkpoint file resumable.
VerificationReport verify_upper(const RamseyInstance& inst, int order, int shards = 0,
                                const std::string& checkpoint_path = "",
                                std::uint64_t stop_after_classes = 0);

// Upper half at R plus lower half at R-1 (witness, or exhaustive search when
// the paper exhibits none).
std::pair<VerificationReport, VerificationReport> verify_ramsey(const RamseyInstance& inst,
                                                                int shards = 0);

// Seeded G(order,1/2) probe for regimes beyond the enumeration ceiling.
VerificationReport sample_check(const RamseyInstance& inst, int order, std::uint64_t trials,
                                std::uint64_t seed, int shards = 0);

}  // namespace jramsey
