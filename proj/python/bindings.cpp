#include "tsplit/certifier.hpp"
#include "tsplit/construction.hpp"
#include "tsplit/digraph.hpp"
#include "tsplit/errors.hpp"
#include "tsplit/experiments.hpp"
#include "tsplit/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

namespace py = pybind11;
using namespace tsplit;

namespace {

auto make_set(std::size_t n, const std::vector<Vertex>& ids) -> VertexSet {
    return VertexSet(n, std::span<const Vertex>(ids));
}

auto report_dict(const SearchReport& r) -> py::dict {
    py::dict d;
    d["best_set"] = r.best_set.ids();
    d["best_value"] = r.best_value;
    d["nodes_visited"] = r.nodes_visited;
    d["pruned"] = r.pruned;
    d["exact"] = r.exact;
    d["elapsed"] = std::chrono::duration<double>(r.elapsed).count();
    return d;
}

auto options(std::uint64_t budget, unsigned threads, bool pruning) -> SearchOptions {
    SearchOptions o;
    o.budget = budget;
    o.threads = threads;
    o.pruning = pruning;
    return o;
}

auto certificate_dict(const BoundCertificate& c) -> py::dict {
    py::dict d;
    d["kind"] = to_string(c.kind);
    d["level"] = c.level;
    d["subset"] = c.subset.ids();
    d["rotation"] = c.rotation;
    d["part_sizes"] = c.part_sizes;
    d["claimed_bound"] = c.claimed_bound;
    if (c.chosen)
        d["chosen"] = c.chosen->ids();
    d["child"] = c.child ? py::object(certificate_dict(*c.child)) : py::object(py::none());
    return d;
}

} // namespace

PYBIND11_MODULE(_tsplit, m) {
    m.doc() = "Recursive tournaments T_k, min out-degree bound certificates and subset search";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def_property_readonly("n", &Digraph::n)
        .def("has_arc", &Digraph::has_arc, py::arg("u"), py::arg("v"))
        .def("add_arc", &Digraph::add_arc, py::arg("u"), py::arg("v"))
        .def("out_degree", &Digraph::out_degree, py::arg("u"))
        .def("in_degree", &Digraph::in_degree, py::arg("v"))
        .def("arc_count", &Digraph::arc_count)
        .def("to_text", [](const Digraph& d) { return write_digraph(d); })
        .def_static("from_text", [](const std::string& text) { return read_digraph(text); }, py::arg("text"))
        .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
        .def("__len__", &Digraph::n);

    m.def("build_T", &build_T_recursive, py::arg("k"), py::arg("size_limit") = default_size_limit);
    m.def("build_D", &build_D, py::arg("k"), py::arg("size_limit") = default_size_limit);
    m.def("compose_cyclic", &compose_cyclic, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("size_limit") = default_size_limit);
    m.def("trit_arc", &trit_arc, py::arg("u"), py::arg("v"), py::arg("k"));
    m.def("is_tournament", &is_tournament, py::arg("d"));
    m.def("delete_vertex", &delete_vertex, py::arg("d"), py::arg("v"));

    m.def(
        "level_params",
        [](unsigned k) {
            const auto p = level_params(k);
            py::dict d;
            d["k"] = p.k;
            d["order"] = p.order;
            d["reg_degree"] = p.reg_degree;
            d["n"] = p.n;
            d["s"] = p.s;
            d["bound"] = p.bound;
            return d;
        },
        py::arg("k"));

    m.def(
        "min_out_degree",
        [](const Digraph& d, std::optional<std::vector<Vertex>> ids) {
            return ids ? min_out_degree(d, make_set(d.n(), *ids)) : min_out_degree(d);
        },
        py::arg("d"), py::arg("ids") = py::none());
    m.def(
        "induced", [](const Digraph& d, const std::vector<Vertex>& ids) { return induced(d, make_set(d.n(), ids)); },
        py::arg("d"), py::arg("ids"));

    m.def(
        "certify_bound",
        [](unsigned k, const std::vector<Vertex>& ids) {
            const auto cert = certify_bound(k, make_set(pow3(k), ids));
            py::dict d = certificate_dict(cert);
            d["replays"] = replay(cert);
            d["text"] = render(cert);
            return d;
        },
        py::arg("k"), py::arg("ids"));
    m.def(
        "min_identity_check",
        [](unsigned k, const std::vector<Vertex>& ids) {
            const auto r = min_identity_check(k, make_set(pow3(k), ids));
            return py::make_tuple(r.holds(), r.direct, r.via_parts);
        },
        py::arg("k"), py::arg("ids"));

    m.def(
        "enumerate_max",
        [](const Digraph& d, std::size_t lo, std::size_t hi, std::uint64_t budget, unsigned threads) {
            return report_dict(enumerate_max(d, {lo, hi}, options(budget, threads, true)));
        },
        py::arg("d"), py::arg("lo"), py::arg("hi"), py::arg("budget") = default_budget, py::arg("threads") = 1);
    m.def(
        "branch_bound_max",
        [](const Digraph& d, std::size_t size, unsigned threads, bool pruning) {
            return report_dict(branch_bound_max(d, size, options(default_budget, threads, pruning)));
        },
        py::arg("d"), py::arg("size"), py::arg("threads") = 1, py::arg("pruning") = true);
    m.def(
        "verify_theorem2",
        [](unsigned k, std::uint64_t budget, unsigned threads) {
            const auto c = verify_theorem2(k, options(budget, threads, true));
            py::dict d = report_dict(c.report);
            d["bound"] = c.params.bound;
            d["passed"] = c.passed ? py::object(py::bool_(*c.passed)) : py::object(py::none());
            return d;
        },
        py::arg("k"), py::arg("budget") = default_budget, py::arg("threads") = 1);

    m.def(
        "random_balanced_split",
        [](const Digraph& d, std::uint64_t seed) {
            const auto t = random_balanced_split(d, seed);
            return py::make_tuple(t.half_one.ids(), t.delta_one, t.delta_two);
        },
        py::arg("d"), py::arg("seed"));
    m.def(
        "split_experiment",
        [](const Digraph& d, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
            const auto s = split_experiment(d, trials, seed, threads);
            py::list rows;
            for (std::size_t i = 0; i < s.trials.size(); ++i)
                rows.append(py::make_tuple(i, s.trials[i].seed, s.trials[i].delta_one, s.trials[i].delta_two));
            py::dict out;
            out["trials"] = rows;
            out["max_of_max"] = s.max_of_max;
            out["mean_of_max"] = s.mean_of_max;
            return out;
        },
        py::arg("d"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);
    m.def(
        "gap_table",
        [](unsigned k_max) {
            py::list rows;
            for (const auto& r : gap_table(k_max)) {
                py::dict d;
                d["k"] = r.k;
                d["n"] = r.n;
                d["s"] = r.s;
                d["bound"] = r.bound;
                d["gap"] = py::make_tuple(r.gap.num, r.gap.den);
                d["log3_s"] = r.log3_s;
                rows.append(d);
            }
            return rows;
        },
        py::arg("k_max"));
}
