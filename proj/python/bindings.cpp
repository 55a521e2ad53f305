#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jramsey/detect.hpp"
#include "jramsey/enumerate.hpp"
#include "jramsey/extract.hpp"
#include "jramsey/graph6.hpp"
#include "jramsey/ramsey.hpp"

namespace py = pybind11;
using namespace jramsey;

namespace {

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for_each_bit(g.row(u), [&](int v) {
            if (u < v) edges.emplace_back(u, v);
        });
    return edges;
}

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["instance"] = py::make_tuple(r.instance.k, r.instance.n, r.instance.m);
    d["order"] = r.order;
    d["classes_total"] = r.classes_total;
    d["classes_failed"] = r.classes_failed;
    d["counterexamples"] = r.counterexamples;
    d["witnesses"] = r.witnesses;
    d["elapsed_ms"] = r.elapsed_ms;
    d["trials"] = r.trials;
    d["confirmed_pass"] = r.confirmed_pass;
    d["inconclusive"] = r.inconclusive;
    d["seed"] = r.seed;
    return d;
}

py::dict trace_dict(const CaseTrace& t) {
    py::dict d;
    d["subcase"] = t.subcase;
    d["L"] = t.L;
    d["Y"] = t.Y;
    d["A"] = t.A;
    d["B"] = t.B;
    d["D1"] = t.D1;
    d["D2"] = t.D2;
    d["b"] = t.b ? py::cast(*t.b) : py::none();
    d["v1"] = t.v1 ? py::cast(*t.v1) : py::none();
    return d;
}

py::dict jahangir_dict(const JahangirEmbedding& e) {
    py::dict d;
    d["hub"] = e.hub;
    d["cycle"] = e.cycle;
    return d;
}

}  // namespace

PYBIND11_MODULE(_jramsey, m) {
    m.doc() = "path-versus-Jahangir Ramsey verification core";

    py::register_exception<CeilingError>(m, "CeilingError");
    py::register_exception<WitnessUnavailable>(m, "WitnessUnavailable");
    static py::exception<FalsificationError> falsification(m, "Falsification");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const FalsificationError& e) {
            falsification(e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def_static("empty", &Graph::empty)
        .def_static("from_edges", &Graph::from_edges)
        .def_static("path", &Graph::path)
        .def_static("cycle", &Graph::cycle)
        .def_static("complete", &Graph::complete)
        .def_static("complete_bipartite", &Graph::complete_bipartite)
        .def_static("star", &Graph::star)
        .def_static("wheel", &Graph::wheel)
        .def_static("jahangir", &Graph::jahangir)
        .def_static("union_of_completes", &Graph::union_of_completes)
        .def_property_readonly("order", &Graph::order)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &edge_list)
        .def("complement", &Graph::complement)
        .def("largest_component_order", &Graph::largest_component_order)
        .def("permuted", &Graph::permuted)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__",
             [](const Graph& g) { return "Graph(" + describe_graph(g) + ")"; });

    m.def("parse_graph6", &parse_graph6);
    m.def("emit_graph6", &emit_graph6);
    m.def("describe_graph", &describe_graph);
    m.def("make_standard", [](const std::string& kind, const std::vector<int>& params) {
        return make_standard(standard_kind_from_string(kind), params);
    });
    m.def("chromatic_number", &chromatic_number);
    m.def("disjoint_union", &disjoint_union);

    m.def("longest_path", &longest_path);
    m.def("contains_path", [](const Graph& g, int n) -> py::object {
        auto e = contains_path(g, n);
        return e ? py::cast(e->map) : py::object(py::none());
    });
    m.def("contains_disjoint_paths", [](const Graph& g, int k, int n) -> py::object {
        auto es = contains_disjoint_paths(g, k, n);
        if (!es) return py::none();
        std::vector<std::vector<int>> maps;
        for (const auto& e : *es) maps.push_back(e.map);
        return py::cast(maps);
    });
    m.def("contains_jahangir", [](const Graph& g, int m_) -> py::object {
        auto e = contains_jahangir(g, m_);
        return e ? py::object(jahangir_dict(*e)) : py::object(py::none());
    });

    m.def("claimed_value", [](int k, int n, int m_) -> py::object {
        auto v = claimed_value(RamseyInstance(k, n, m_));
        return v ? py::cast(*v) : py::object(py::none());
    });
    m.def("chvatal_harary_bound", &chvatal_harary_bound);
    m.def("build_lower_witness",
          [](int k, int n, int m_) { return build_lower_witness(RamseyInstance(k, n, m_)); });
    m.def("verify_witness",
          [](const Graph& f, int k, int n, int m_) {
              return verify_witness(f, RamseyInstance(k, n, m_));
          });
    m.def(
        "verify_upper",
        [](int k, int n, int m_, int order, int shards, const std::string& checkpoint) {
            return report_dict(verify_upper(RamseyInstance(k, n, m_), order, shards, checkpoint));
        },
        py::arg("k"), py::arg("n"), py::arg("m"), py::arg("order"), py::arg("shards") = 0,
        py::arg("checkpoint") = "");
    m.def(
        "verify_ramsey",
        [](int k, int n, int m_, int shards) {
            auto [upper, lower] = verify_ramsey(RamseyInstance(k, n, m_), shards);
            return py::make_tuple(report_dict(upper), report_dict(lower));
        },
        py::arg("k"), py::arg("n"), py::arg("m"), py::arg("shards") = 0);
    m.def(
        "sample_check",
        [](int k, int n, int m_, int order, std::uint64_t trials, std::uint64_t seed,
           int shards) {
            return report_dict(sample_check(RamseyInstance(k, n, m_), order, trials, seed, shards));
        },
        py::arg("k"), py::arg("n"), py::arg("m"), py::arg("order"), py::arg("trials"),
        py::arg("seed"), py::arg("shards") = 0);

    m.def("count_graphs", &count_graphs);
    m.def(
        "enumerate_graph6",
        [](int order, int shard, int shards) {
            std::vector<std::string> out;
            std::optional<ShardSpec> spec;
            if (shards > 1 || shard > 0) spec = ShardSpec{shard, shards};
            enumerate_graphs(order, spec, [&](const Graph& g) {
                out.push_back(emit_graph6(g));
                return true;
            });
            return out;
        },
        py::arg("order"), py::arg("shard") = 0, py::arg("shards") = 1);

    m.def("extract_jahangir_theorem1", [](const Graph& f, int n, int m_) {
        auto r = extract_jahangir_theorem1(f, n, m_);
        py::dict d;
        d["embedding"] = jahangir_dict(r.embedding);
        d["trace"] = trace_dict(r.trace);
        return d;
    });
    m.def("extract_j4_theorem2_base", [](const Graph& f) {
        auto r = extract_j4_theorem2_base(f);
        py::dict d;
        d["embedding"] = jahangir_dict(r.embedding);
        d["trace"] = trace_dict(r.trace);
        return d;
    });
    m.def("extract_k_paths", [](const Graph& f, int k, int n, int m_) {
        auto paths = extract_k_paths(f, RamseyInstance(k, n, m_));
        std::vector<std::vector<int>> maps;
        for (const auto& e : paths) maps.push_back(e.map);
        return maps;
    });
    m.def("validate_embedding",
          [](const Graph& pattern, const Graph& host, const std::vector<int>& map) {
              return validate_embedding(pattern, host, Embedding{map});
          });
    m.def("validate_jahangir_embedding",
          [](const Graph& host, int m_, int hub, const std::vector<int>& cycle) {
              return validate_jahangir_embedding(host, m_, JahangirEmbedding{hub, cycle});
          });
}
