#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "kundupack/degseq.hpp"
#include "kundupack/io.hpp"
#include "kundupack/navigate.hpp"
#include "kundupack/oracle.hpp"

namespace py = pybind11;
using namespace kundu;

namespace {

// Dicts cross the boundary as the same JSON documents the CLI reads and writes.
io::Json from_py(const py::object& obj) {
    auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return io::Json::parse(text);
}

py::object to_py(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Mode mode_of(const std::string& text) {
    if (text == "guaranteed") return Mode::guaranteed;
    if (text == "best-effort") return Mode::best_effort;
    throw Error(ErrorKind::invalid_input, "mode must be 'guaranteed' or 'best-effort'");
}

KunduRealization realization_of(const py::object& obj) {
    KunduRealization kr = io::kundu_from_json(from_py(obj));
    if (auto why = invariant_violation(kr)) throw Error(ErrorKind::invalid_input, *why);
    return kr;
}

OneFactor factor_of(const py::object& obj, std::size_t n) {
    io::Json doc{{"n", n}, {"factor", from_py(obj)}};
    return io::parse_factor(doc.dump());
}

py::list edge_list(const std::vector<Edge>& edges) {
    py::list out;
    for (const Edge& e : edges) out.append(py::make_tuple(e.u, e.v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kundu realizations of degree sequences and K-swap navigation between them";

    py::exception<Error>(m, "KunduError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object cls = py::module_::import("kundupack._core").attr("KunduError");
            py::object exc = cls(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            py::set_error(cls, exc);
        }
    });

    m.attr("DEGREE_BOUND") = kDegreeBound;

    m.def("is_graphic", [](std::vector<int> seq) { return is_graphic(DegreeSequence(std::move(seq))); });
    m.def("kundu_feasible", [](std::vector<int> seq) { return kundu_feasible(DegreeSequence(std::move(seq))); });
    m.def("realize", [](std::vector<int> seq) { return edge_list(realize(DegreeSequence(std::move(seq))).edges()); },
          "Havel-Hakimi realization as a sorted edge list.");

    m.def(
        "kundu_realize",
        [](std::vector<int> seq, std::uint64_t seed, const std::string& mode, std::size_t walk) {
            std::mt19937_64 rng(seed);
            KunduInstance inst{DegreeSequence(std::move(seq)), mode_of(mode)};
            return to_py(io::to_json(random_kundu_realization(inst, rng, walk)));
        },
        py::arg("seq"), py::arg("seed") = 0, py::arg("mode") = "best-effort", py::arg("walk") = 0);

    m.def(
        "navigate",
        [](const py::object& start, const py::object& goal, const std::string& mode) {
            return to_py(io::to_json(navigate_full(realization_of(start), realization_of(goal), mode_of(mode))));
        },
        py::arg("start"), py::arg("goal"), py::arg("mode") = "best-effort");

    m.def(
        "embed_factor",
        [](const py::object& kr, const py::object& factor, const std::string& mode) {
            auto start = realization_of(kr);
            auto j = factor_of(factor, start.order());
            auto emb = embed_factor(start, j, mode_of(mode));
            return py::dict(py::arg("result") = to_py(io::to_json(emb.realization)),
                            py::arg("trace") = to_py(io::to_json(emb.trace)));
        },
        py::arg("kr"), py::arg("factor"), py::arg("mode") = "best-effort");

    m.def(
        "verify_trace",
        [](const py::object& start, const py::object& trace) {
            auto end = verify_trace(realization_of(start), io::trace_from_json(from_py(trace)));
            return to_py(io::to_json(end));
        },
        "Replays a trace and returns its end state; raises KunduError on any illegal step.");

    m.def("enumerate_realizations", [](std::vector<int> seq) {
        py::list out;
        for (const auto& g : oracle::enumerate_realizations(DegreeSequence(std::move(seq)))) out.append(edge_list(g.edges()));
        return out;
    });
    m.def("enumerate_perfect_matchings", [](std::size_t n) {
        py::list out;
        for (const auto& f : oracle::enumerate_perfect_matchings(n)) out.append(edge_list(f.edges()));
        return out;
    });
    m.def("enumerate_kundu_realizations", [](std::vector<int> seq) {
        py::list out;
        for (const auto& kr : oracle::enumerate_kundu_realizations(DegreeSequence(std::move(seq))))
            out.append(to_py(io::to_json(kr)));
        return out;
    });
    m.def("metagraph", [](std::vector<int> seq) {
        auto r = oracle::report(oracle::kswap_metagraph(DegreeSequence(std::move(seq))));
        return py::dict(py::arg("nodes") = r.nodes, py::arg("edges") = r.edges, py::arg("components") = r.components,
                        py::arg("witnesses") = r.witnesses);
    });
    m.def("factor_coverage", [](std::vector<int> seq) -> py::tuple {
        auto c = oracle::factor_coverage(DegreeSequence(std::move(seq)));
        if (!c.witness) return py::make_tuple(c.covered, py::none());
        return py::make_tuple(c.covered, edge_list(c.witness->edges()));
    });
}
