#include "lpadecomp/decomp.hpp"
#include "lpadecomp/errors.hpp"
#include "lpadecomp/expr.hpp"
#include "lpadecomp/io.hpp"
#include "lpadecomp/lattice.hpp"
#include "lpadecomp/report.hpp"
#include "lpadecomp/steinberg.hpp"
#include "lpadecomp/topology.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>

namespace py = pybind11;
using namespace lpadecomp;

namespace {

using Names = std::vector<std::string>;

Names names(const Graph& g, const VertexSet& s) {
    Names out;
    for (VertexId v : s.members())
        out.push_back(g.vertex_name(v));
    return out;
}

HSPair make_pair_checked(const Graph& g, const Names& H, const Names& S) {
    HSPair p{g.make_set(H), g.make_set(S)};
    require_valid_pair(g, p, "pair");
    return p;
}

py::tuple pair_tuple(const Graph& g, const HSPair& p) { return py::make_tuple(names(g, p.H), names(g, p.S)); }

// An algebra keeps its own copy of the graph so elements outlive the caller's.
class PyAlgebra {
public:
    PyAlgebra(const Graph& g, const std::string& field)
        : graph_(std::make_shared<Graph>(g)), alg_(*graph_, parse_field(field)) {}

    const SteinbergAlgebra& get() const { return alg_; }
    const Graph& graph() const { return *graph_; }

private:
    std::shared_ptr<Graph> graph_;
    SteinbergAlgebra alg_;
};

struct PyElement {
    std::shared_ptr<const PyAlgebra> alg;
    AlgebraElement value;
};

std::shared_ptr<const PyAlgebra> same_algebra(const PyElement& a, const PyElement& b) {
    if (a.alg != b.alg)
        throw ContractError("elements belong to different algebras");
    return a.alg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Decomposability of Leavitt path algebras of graphs with infinite emitters";
    m.attr("__version__") = kToolVersion;
    m.attr("REPORT_SCHEMA") = kReportSchema;

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def_static("from_json", &parse_graph, py::arg("text"))
        .def_static("load", &load_graph, py::arg("path"))
        .def("to_json", &serialize_graph)
        .def("to_dot", &graph_dot)
        .def_property_readonly("vertices", &Graph::vertex_names)
        .def_property_readonly("bundles",
                               [](const Graph& g) {
                                   py::list out;
                                   for (const Bundle& b : g.bundles())
                                       out.append(py::make_tuple(b.id, g.vertex_name(b.source),
                                                                 g.vertex_name(b.target), b.multiplicity.to_string()));
                                   return out;
                               })
        .def("kind", [](const Graph& g, const std::string& v) { return std::string(to_string(g.kind(g.vertex(v)))); })
        .def("__eq__", &Graph::operator==)
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.bundles().size()) +
                   " bundles>";
        });

    m.def("hereditary_saturated_sets", [](const Graph& g) {
        std::vector<Names> out;
        for (const VertexSet& h : enumerate_hs(g))
            out.push_back(names(g, h));
        return out;
    });
    m.def(
        "breaking_vertices", [](const Graph& g, const Names& H) { return names(g, breaking_vertices(g, g.make_set(H))); },
        py::arg("graph"), py::arg("H"));
    m.def("pairs", [](const Graph& g) {
        py::list out;
        for (const HSPair& p : enumerate_TE(g))
            out.append(pair_tuple(g, p));
        return out;
    });
    m.def(
        "is_clopen",
        [](const Graph& g, const Names& H, const Names& S) {
            const ClopenVerdict v = is_clopen(g, make_pair_checked(g, H, S));
            py::dict d;
            d["clopen"] = v.clopen;
            d["failing"] = v.clopen ? py::none() : py::cast(std::string(to_string(v.failing)));
            d["cycle"] = v.cycle ? py::cast(format_path(g, *v.cycle)) : py::none();
            d["vertex"] = v.vertex ? py::cast(g.vertex_name(*v.vertex)) : py::none();
            return d;
        },
        py::arg("graph"), py::arg("H"), py::arg("S") = Names{});
    m.def("decompose", [](const Graph& g) {
        const DecompVerdict v = is_decomposable(g);
        py::dict d;
        d["decomposable"] = v.decomposable;
        d["witness"] = v.witness ? py::object(pair_tuple(g, *v.witness)) : py::none();
        d["complement"] = v.complement ? py::object(pair_tuple(g, *v.complement)) : py::none();
        return d;
    });
    m.def("compatible_split", [](const Graph& g) -> py::object {
        const CompatibleSplit s = compatible_split_check(g);
        if (!s.witness)
            return py::none();
        return py::make_tuple(names(g, s.witness->first), names(g, s.witness->second));
    });
    m.def(
        "naive_check",
        [](const Graph& g, const Names& H1, const Names& H2) -> py::object {
            const PairCondition c = naive_AN_check(g, g.make_set(H1), g.make_set(H2));
            if (c.holds)
                return py::none();
            return py::cast(g.vertex_name(*c.offending));
        },
        py::arg("graph"), py::arg("H1"), py::arg("H2"),
        "Vertex at which the uncorrected path-count condition fails, or None.");
    m.def("hasse_dot", [](const Graph& g) { return hasse_dot(g); });
    m.def("analyze_json", [](const Graph& g) { return analyze(g).dump(); });
    m.def("selfcheck", [](const Graph& g) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const CheckResult& c : selfcheck(g).checks)
            out.emplace_back(c.name, c.passed, c.detail);
        return out;
    });

    py::class_<PyElement>(m, "Element")
        .def("is_zero", [](const PyElement& e) { return e.alg->get().is_zero(e.value); })
        .def("degrees", [](const PyElement& e) { return e.alg->get().degrees(e.value); })
        .def("normalize", [](const PyElement& e) { return PyElement{e.alg, e.alg->get().normalize(e.value)}; })
        .def("__add__",
             [](const PyElement& a, const PyElement& b) {
                 return PyElement{same_algebra(a, b), a.alg->get().add(a.value, b.value)};
             })
        .def("__sub__",
             [](const PyElement& a, const PyElement& b) {
                 return PyElement{same_algebra(a, b), a.alg->get().subtract(a.value, b.value)};
             })
        .def("__mul__",
             [](const PyElement& a, const PyElement& b) {
                 return PyElement{same_algebra(a, b), a.alg->get().product(a.value, b.value)};
             })
        .def("__eq__",
             [](const PyElement& a, const PyElement& b) {
                 return a.alg == b.alg && a.alg->get().equal(a.value, b.value);
             })
        .def("__str__", [](const PyElement& e) { return e.alg->get().format(e.alg->get().normalize(e.value)); });

    py::class_<PyAlgebra, std::shared_ptr<PyAlgebra>>(m, "Algebra")
        .def(py::init<const Graph&, const std::string&>(), py::arg("graph"), py::arg("field") = "Q")
        .def(
            "parse",
            [](const std::shared_ptr<PyAlgebra>& self, const std::string& text, std::optional<Names> H) {
                std::optional<VertexSet> h;
                if (H)
                    h = self->graph().make_set(*H);
                return PyElement{self, parse_expression(self->get(), text, h)};
            },
            py::arg("expr"), py::arg("H") = py::none())
        .def(
            "in_ideal",
            [](const PyAlgebra& self, const PyElement& e, const Names& H, const Names& S) {
                return self.get().ideal_membership(e.value, make_pair_checked(self.graph(), H, S));
            },
            py::arg("element"), py::arg("H"), py::arg("S") = Names{})
        .def(
            "split",
            [](const std::shared_ptr<PyAlgebra>& self, const PyElement& e, const Names& H, const Names& S) {
                auto [a, b] = self->get().split_element(e.value, make_pair_checked(self->graph(), H, S));
                return py::make_tuple(PyElement{self, std::move(a)}, PyElement{self, std::move(b)});
            },
            py::arg("element"), py::arg("H"), py::arg("S") = Names{});
}
