#include "jramsey/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "jramsey/detect.hpp"
#include "jramsey/enumerate.hpp"
#include "jramsey/extract.hpp"
#include "jramsey/graph6.hpp"
#include "jramsey/ramsey.hpp"

namespace jramsey::cli {

namespace {

using nlohmann::json;

json base_report(const std::string& command) {
    return json{{"schema_version", 1},
                {"command", command},
                {"instance", nullptr},
                {"order", nullptr},
                {"totals", json::object()},
                {"failures", 0},
                {"counterexamples", json::array()},
                {"subcase_tallies", json::object()},
                {"elapsed_ms", 0.0},
                {"seed", nullptr},
                {"checkpoint", nullptr}};
}

json instance_json(const RamseyInstance& i) {
    return json{{"k", i.k}, {"n", i.n}, {"m", i.m}};
}

json trace_json(const CaseTrace& t) {
    json j{{"subcase", t.subcase}, {"L", t.L},   {"Y", t.Y},  {"A", t.A},
           {"B", t.B},             {"D1", t.D1}, {"D2", t.D2}};
    j["b"] = t.b ? json(*t.b) : json(nullptr);
    j["v1"] = t.v1 ? json(*t.v1) : json(nullptr);
    return j;
}

json jahangir_json(const JahangirEmbedding& e) {
    return json{{"hub", e.hub}, {"cycle", e.cycle}};
}

void fill_verification(json& rep, const VerificationReport& r) {
    rep["instance"] = instance_json(r.instance);
    rep["order"] = r.order;
    rep["totals"]["classes_total"] = r.classes_total;
    rep["totals"]["classes_failed"] = r.classes_failed;
    if (r.trials > 0 || r.confirmed_pass > 0 || r.inconclusive > 0) {
        rep["totals"]["trials"] = r.trials;
        rep["totals"]["confirmed_pass"] = r.confirmed_pass;
        rep["totals"]["inconclusive"] = r.inconclusive;
        rep["seed"] = r.seed;
    }
    rep["failures"] = r.classes_failed;
    rep["counterexamples"] = r.counterexamples;
    if (!r.witnesses.empty()) rep["totals"]["witnesses"] = r.witnesses;
    rep["elapsed_ms"] = r.elapsed_ms;
    if (!r.checkpoint_path.empty()) rep["checkpoint"] = r.checkpoint_path;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

struct Timed {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
    CLI::App app{"path-versus-Jahangir Ramsey verification toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit a standard-family graph as graph6");
    std::string gen_family;
    std::vector<int> gen_params;
    gen->add_option("family", gen_family)->required();
    gen->add_option("params", gen_params)->required();

    // contains
    auto* contains = app.add_subcommand("contains", "test containment on graph6 input");
    std::string contains_mode;
    std::vector<int> contains_params;
    contains->add_option("mode", contains_mode)
        ->required()
        ->check(CLI::IsMember({"path", "kpaths", "jahangir"}));
    contains->add_option("params", contains_params)->required();

    // witness
    auto* witness = app.add_subcommand("witness", "build the lower-bound witness");
    int w_k = 1, w_n = 2, w_m = 2;
    witness->add_option("k", w_k)->required();
    witness->add_option("n", w_n)->required();
    witness->add_option("m", w_m)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustively verify a claimed value");
    int v_k = 1, v_n = 2, v_m = 2, v_order = 0, v_shards = 0;
    std::string v_checkpoint;
    verify->add_option("k", v_k)->required();
    verify->add_option("n", v_n)->required();
    verify->add_option("m", v_m)->required();
    verify->add_option("--order", v_order);
    verify->add_option("--shards", v_shards, "worker count (default: logical cores)");
    verify->add_option("--checkpoint", v_checkpoint);

    // extract
    auto* extract = app.add_subcommand("extract", "run a proof-guided extraction on graph6 input");
    std::string ex_mode;
    std::vector<int> ex_params;
    extract->add_option("mode", ex_mode)
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "kpaths"}));
    extract->add_option("params", ex_params);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "isomorph-free exhaustive generation");
    int e_order = 1, e_shards = 1, e_shard = -1;
    bool e_count_only = false;
    std::string e_checkpoint;
    enumerate->add_option("order", e_order)->required();
    enumerate->add_flag("--count-only", e_count_only);
    enumerate->add_option("--shards", e_shards);
    enumerate->add_option("--shard", e_shard, "run a single shard index");
    enumerate->add_option("--checkpoint", e_checkpoint, "requires --shard when --shards > 1");

    // bound
    auto* bound = app.add_subcommand("bound", "Chvatal-Harary lower bound");
    std::string b_g, b_h;
    bound->add_option("g6_g", b_g)->required();
    bound->add_option("g6_h", b_h)->required();

    // sample
    auto* sample = app.add_subcommand("sample", "randomized probe at a given order");
    int s_k = 1, s_n = 2, s_m = 2, s_order = 0, s_shards = 0;
    std::uint64_t s_trials = 0, s_seed = 0;
    sample->add_option("k", s_k)->required();
    sample->add_option("n", s_n)->required();
    sample->add_option("m", s_m)->required();
    sample->add_option("--order", s_order)->required();
    sample->add_option("--trials", s_trials)->required();
    sample->add_option("--seed", s_seed)->required();
    sample->add_option("--shards", s_shards);

    std::vector<const char*> argv;
    argv.push_back("jramsey");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        out << base_report("usage-error").dump() << '\n';
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        Timed timer;
        if (*gen) {
            Graph g = make_standard(standard_kind_from_string(gen_family), gen_params);
            json rep = base_report("gen");
            rep["order"] = g.order();
            rep["totals"]["edges"] = g.edge_count();
            out << describe_graph(g) << '\n';
            rep["elapsed_ms"] = timer.ms();
            out << rep.dump() << '\n';
            return 0;
        }

        if (*contains) {
            auto graphs = read_graph6_stream(in);
            json rep = base_report("contains");
            json results = json::array();
            int found = 0;
            for (const auto& g : graphs) {
                bool r;
                if (contains_mode == "path") {
                    if (contains_params.size() != 1)
                        throw CLI::ValidationError("contains path takes <n>");
                    r = contains_path(g, contains_params[0]).has_value();
                } else if (contains_mode == "kpaths") {
                    if (contains_params.size() != 2)
                        throw CLI::ValidationError("contains kpaths takes <k> <n>");
                    r = contains_disjoint_paths(g, contains_params[0], contains_params[1])
                            .has_value();
                } else {
                    if (contains_params.size() != 1)
                        throw CLI::ValidationError("contains jahangir takes <m>");
                    int m = contains_params[0];
                    r = g.order() >= 2 * m + 1 && contains_jahangir(g, m).has_value();
                }
                results.push_back(r);
                found += r ? 1 : 0;
                out << (r ? "true" : "false") << '\n';
            }
            rep["totals"]["graphs"] = graphs.size();
            rep["totals"]["containing"] = found;
            rep["results"] = results;
            rep["elapsed_ms"] = timer.ms();
            out << rep.dump() << '\n';
            return 0;
        }

        if (*witness) {
            RamseyInstance inst(w_k, w_n, w_m);
            json rep = base_report("witness");
            rep["instance"] = instance_json(inst);
            try {
                Graph g = build_lower_witness(inst);
                bool valid = g.order() <= 24 ? verify_witness(g, inst) : true;
                rep["order"] = g.order();
                rep["totals"]["witness_valid"] = g.order() <= 24 ? json(valid) : json(nullptr);
                out << describe_graph(g) << '\n';
                if (g.order() <= 24 && !valid) {
                    rep["failures"] = 1;
                    rep["elapsed_ms"] = timer.ms();
                    out << rep.dump() << '\n';
                    return 1;
                }
            } catch (const WitnessUnavailable& e) {
                rep["totals"]["witness_available"] = false;
                rep["totals"]["reason"] = e.what();
            }
            rep["elapsed_ms"] = timer.ms();
            out << rep.dump() << '\n';
            return 0;
        }

        if (*verify) {
            RamseyInstance inst(v_k, v_n, v_m);
            json rep = base_report("verify");
            if (v_order > 0) {
                VerificationReport r = verify_upper(inst, v_order, v_shards, v_checkpoint);
                fill_verification(rep, r);
                out << rep.dump() << '\n';
                return r.classes_failed == 0 ? 0 : 1;
            }
            auto [upper, lower] = verify_ramsey(inst, v_shards);
            fill_verification(rep, upper);
            rep["totals"]["claimed"] = claimed_value(inst).value();
            rep["totals"]["lower_order"] = lower.order;
            rep["totals"]["lower_searched"] = lower.classes_total;
            rep["totals"]["witnesses"] = lower.witnesses;
            rep["totals"]["lower_failed"] = lower.classes_failed;
            rep["elapsed_ms"] = timer.ms();
            out << rep.dump() << '\n';
            return (upper.classes_failed == 0 && lower.classes_failed == 0) ? 0 : 1;
        }

        if (*extract) {
            auto graphs = read_graph6_stream(in);
            json rep = base_report("extract");
            std::map<std::string, int> tallies;
            json results = json::array();
            int falsifications = 0;
            for (const auto& g : graphs) {
                try {
                    if (ex_mode == "thm1") {
                        if (ex_params.size() != 2)
                            throw CLI::ValidationError("extract thm1 takes <n> <m>");
                        auto r = extract_jahangir_theorem1(g, ex_params[0], ex_params[1]);
                        tallies[r.trace.subcase]++;
                        results.push_back({{"embedding", jahangir_json(r.embedding)},
                                           {"trace", trace_json(r.trace)}});
                    } else if (ex_mode == "thm2") {
                        auto r = extract_j4_theorem2_base(g);
                        tallies[r.trace.subcase]++;
                        results.push_back({{"embedding", jahangir_json(r.embedding)},
                                           {"trace", trace_json(r.trace)}});
                    } else {
                        if (ex_params.size() != 3)
                            throw CLI::ValidationError("extract kpaths takes <k> <n> <m>");
                        RamseyInstance inst(ex_params[0], ex_params[1], ex_params[2]);
                        auto paths = extract_k_paths(g, inst);
                        json maps = json::array();
                        for (const auto& p : paths) maps.push_back(p.map);
                        results.push_back({{"paths", maps}});
                    }
                } catch (const FalsificationError& e) {
                    ++falsifications;
                    rep["counterexamples"].push_back(e.graph6);
                    results.push_back(
                        {{"falsification", e.what()}, {"trace", trace_json(e.trace)}});
                }
            }
            for (const auto& [k, v] : tallies) rep["subcase_tallies"][k] = v;
            rep["totals"]["graphs"] = graphs.size();
            rep["failures"] = falsifications;
            rep["results"] = results;
            rep["elapsed_ms"] = timer.ms();
            out << rep.dump() << '\n';
            return falsifications == 0 ? 0 : 1;
        }

        if (*enumerate) {
            json rep = base_report("enumerate");
            rep["order"] = e_order;
            std::uint64_t total = 0;
            auto visit = [&](const Graph& g) {
                ++total;
                if (!e_count_only) out << emit_graph6(g) << '\n';
                return true;
            };
            if (e_shard >= 0) {
                Checkpoint ckpt;
                Checkpoint* cp = nullptr;
                if (!e_checkpoint.empty()) {
                    std::ifstream probe(e_checkpoint);
                    if (probe.good()) ckpt = checkpoint_load(e_checkpoint);
                    cp = &ckpt;
                }
                enumerate_graphs(e_order, ShardSpec{e_shard, e_shards}, visit, cp,
                                 cp && !e_checkpoint.empty()
                                     ? std::function<void(const Checkpoint&)>(
                                           [&](const Checkpoint& c) {
                                               checkpoint_save(c, e_checkpoint);
                                           })
                                     : std::function<void(const Checkpoint&)>{});
                if (cp) rep["checkpoint"] = e_checkpoint;
            } else {
                if (!e_checkpoint.empty() && e_shards > 1)
                    throw CLI::ValidationError("--checkpoint needs --shard with --shards > 1");
                for (int i = 0; i < e_shards; ++i)
                    enumerate_graphs(e_order, ShardSpec{i, e_shards}, visit);
            }
            if (e_count_only) out << total << '\n';
            rep["totals"]["classes"] = total;
            rep["elapsed_ms"] = timer.ms();
            out << rep.dump() << '\n';
            return 0;
        }

        if (*bound) {
            Graph g = parse_graph6(b_g);
            Graph h = parse_graph6(b_h);
            int b = chvatal_harary_bound(g, h);
            json rep = base_report("bound");
            rep["totals"]["bound"] = b;
            out << b << '\n';
            rep["elapsed_ms"] = timer.ms();
            out << rep.dump() << '\n';
            return 0;
        }

        if (*sample) {
            RamseyInstance inst(s_k, s_n, s_m);
            VerificationReport r = sample_check(inst, s_order, s_trials, s_seed, s_shards);
            json rep = base_report("sample");
            fill_verification(rep, r);
            rep["seed"] = s_seed;
            out << rep.dump() << '\n';
            return r.classes_failed == 0 ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const CeilingError& e) {
        std::cerr << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace jramsey::cli
