#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "jramsey/graph.hpp"

namespace jramsey {

// Relabeling-invariant serialization; equal iff isomorphic (order <= 12).
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& c) const {
        return std::hash<std::string_view>{}(
            std::string_view(reinterpret_cast<const char*>(c.bytes.data()), c.bytes.size()));
    }
};

CanonicalForm canonical_form(const Graph& g);

// True iff g's labeling realizes the lexicographically minimal column-major
// adjacency bit string over all relabelings. Drives canonical augmentation.
bool is_canonical_labeled(const Graph& g);

}  // namespace jramsey
