#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "jramsey/graph.hpp"

namespace jramsey {

struct ShardSpec {
    int shard_index = 0;
    int shard_total = 1;
};

// Resume state. The enumeration tree is rooted at the canonical graphs of a
// small base order; `roots_done` counts fully processed roots of this shard's
// round-robin slice, so resumption replays nothing and skips nothing.
struct Checkpoint {
    int version = 1;
    int order = 0;
    int shard_index = 0;
    int shard_total = 1;
    std::uint64_t roots_done = 0;
    std::uint64_t processed = 0;
    std::string tallies;  // caller-owned JSON blob
};

// Return false to request a stop; enumeration halts at the next root boundary
// so checkpointed totals stay exact.
using GraphVisitor = std::function<bool(const Graph&)>;

// Visits exactly one canonically labeled representative per isomorphism
// class of the given order (1..10). Returns the number visited by this call.
// on_root, if set, fires with the updated checkpoint after each root.
std::uint64_t enumerate_graphs(int order, std::optional<ShardSpec> shard,
                               const GraphVisitor& visit, Checkpoint* ckpt = nullptr,
                               const std::function<void(const Checkpoint&)>& on_root = {});

std::uint64_t count_graphs(int order);

void checkpoint_save(const Checkpoint& c, const std::string& path);
Checkpoint checkpoint_load(const std::string& path);

}  // namespace jramsey
