#include "jramsey/enumerate.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "jramsey/canonical.hpp"

namespace jramsey {

namespace {

constexpr int kEnumCeiling = 10;
constexpr int kCheckpointVersion = 1;

// Extend a canonically labeled graph one vertex at a time, keeping only
// extensions that are themselves canonically labeled. Each isomorphism class
// of the target order is reached exactly once: stripping the last vertex of a
// canonical labeling yields a canonical labeling.
template <typename F>
bool grow(const Graph& g, int target, F&& leaf) {
    if (g.order() == target) return leaf(g);
    int t = g.order();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << t); ++sub) {
        Graph child = g.with_vertex(Bits128{sub, 0});
        if (!is_canonical_labeled(child)) continue;
        if (!grow(child, target, leaf)) return false;
    }
    return true;
}

std::vector<Graph> collect_roots(int base) {
    std::vector<Graph> roots;
    grow(Graph::empty(1), base, [&](const Graph& g) {
        roots.push_back(g);
        return true;
    });
    return roots;
}

}  // namespace

std::uint64_t enumerate_graphs(int order, std::optional<ShardSpec> shard,
                               const GraphVisitor& visit, Checkpoint* ckpt,
                               const std::function<void(const Checkpoint&)>& on_root) {
    if (order < 1 || order > kEnumCeiling)
        throw CeilingError("enumeration ceiling is order 10");
    ShardSpec s = shard.value_or(ShardSpec{});
    if (s.shard_index < 0 || s.shard_total < 1 || s.shard_index >= s.shard_total)
        throw std::invalid_argument("invalid shard spec");

    std::uint64_t start_root = 0;
    if (ckpt) {
        if (ckpt->order == 0 && ckpt->roots_done == 0 && ckpt->processed == 0) {
            ckpt->version = kCheckpointVersion;
            ckpt->order = order;
            ckpt->shard_index = s.shard_index;
            ckpt->shard_total = s.shard_total;
        }
        if (ckpt->version != kCheckpointVersion)
            throw std::invalid_argument("checkpoint version mismatch");
        if (ckpt->order != order) throw std::invalid_argument("checkpoint order mismatch");
        if (ckpt->shard_index != s.shard_index || ckpt->shard_total != s.shard_total)
            throw std::invalid_argument("checkpoint shard mismatch");
        start_root = ckpt->roots_done;
    }

    int base = order == 1 ? 1 : std::min(order - 1, 7);
    std::vector<Graph> roots = collect_roots(base);

    std::uint64_t total = 0;
    bool stop_requested = false;
    for (std::uint64_t i = start_root; i < roots.size(); ++i) {
        if (static_cast<int>(i % s.shard_total) != s.shard_index) {
            if (ckpt) ckpt->roots_done = i + 1;
            continue;
        }
        std::uint64_t in_root = 0;
        if (base == order) {
            ++in_root;
            if (!visit(roots[i])) stop_requested = true;
        } else {
            grow(roots[i], order, [&](const Graph& g) {
                ++in_root;
                if (!visit(g)) stop_requested = true;
                return true;  // finish the root either way
            });
        }
        total += in_root;
        if (ckpt) {
            ckpt->roots_done = i + 1;
            ckpt->processed += in_root;
            if (on_root) on_root(*ckpt);
        }
        if (stop_requested) break;
    }
    return total;
}

std::uint64_t count_graphs(int order) {
    return enumerate_graphs(order, std::nullopt, [](const Graph&) { return true; });
}

void checkpoint_save(const Checkpoint& c, const std::string& path) {
    nlohmann::json j{{"version", c.version},   {"order", c.order},
                     {"shard", c.shard_index}, {"shard_total", c.shard_total},
                     {"cursor", c.roots_done}, {"processed", c.processed}};
    j["tallies"] = c.tallies.empty() ? nlohmann::json(nullptr)
                                     : nlohmann::json::parse(c.tallies);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write checkpoint file: " + path);
    out << j.dump(2) << '\n';
}

Checkpoint checkpoint_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read checkpoint file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    Checkpoint c;
    c.version = j.at("version").get<int>();
    c.order = j.at("order").get<int>();
    c.shard_index = j.at("shard").get<int>();
    c.shard_total = j.at("shard_total").get<int>();
    c.roots_done = j.at("cursor").get<std::uint64_t>();
    c.processed = j.at("processed").get<std::uint64_t>();
    if (!j.at("tallies").is_null()) c.tallies = j.at("tallies").dump();
    return c;
}

}  // namespace jramsey
