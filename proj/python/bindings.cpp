#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsimplex/chain_complex.hpp"
#include "nsimplex/cocycle.hpp"
#include "nsimplex/electric.hpp"
#include "nsimplex/errors.hpp"
#include "nsimplex/face_graph.hpp"
#include "nsimplex/propagation.hpp"
#include "nsimplex/quantum.hpp"
#include "nsimplex/report.hpp"
#include "nsimplex/reproduce.hpp"

namespace py = pybind11;
using namespace nsimplex;

namespace {

FieldSpec field_from_string(const std::string& name) {
    if (name == "q") return FieldSpec::rationals();
    if (name.rfind("fp:", 0) == 0) return FieldSpec::mod(std::stoll(name.substr(3)));
    throw std::invalid_argument("field must be 'q' or 'fp:<p>'");
}

SignConvention convention_from_string(const std::string& name) {
    if (name == "alt") return SignConvention::alternating;
    if (name == "plain" || name == "paper") return SignConvention::plain;
    throw std::invalid_argument("convention must be 'alt' or 'plain'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact tools for set-theoretic n-simplex relations: cube face "
              "combinatorics, tetrahedron-equation verification, coloring "
              "homology, multiplicative 3-cocycles and monomial operators.";
    m.attr("__version__") = tool_version();

    py::register_exception<ParseError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantViolation", PyExc_RuntimeError);
    py::register_exception<SingularityError>(m, "SingularInput", PyExc_ZeroDivisionError);

    // Faces.
    m.def(
        "enumerate_faces",
        [](int N, int k) {
            std::vector<std::string> out;
            for (const auto& f : enumerate_faces(N, k)) out.push_back(f.str());
            return out;
        },
        py::arg("dim"), py::arg("k"));
    m.def(
        "classify_subface",
        [](const std::string& f, const std::string& g) {
            return classify_subface(FaceCode::parse(f), FaceCode::parse(g)) ==
                           FaceRole::incoming
                       ? "incoming"
                       : "outgoing";
        },
        py::arg("face"), py::arg("subface"));
    m.def(
        "face_order", [](const std::string& g, int n) { return face_order(FaceCode::parse(g), n); },
        py::arg("face"), py::arg("n"));
    m.def(
        "absolutely_incoming_faces",
        [](int N, int n) {
            std::vector<std::string> out;
            for (const auto& f : absolutely_incoming_faces(N, n)) out.push_back(f.str());
            return out;
        },
        py::arg("dim"), py::arg("n"));
    m.def(
        "absolutely_outgoing_faces",
        [](int N, int n) {
            std::vector<std::string> out;
            for (const auto& f : absolutely_outgoing_faces(N, n)) out.push_back(f.str());
            return out;
        },
        py::arg("dim"), py::arg("n"));

    // Maps.
    py::class_<RMap>(m, "RMap")
        .def_static("identity", &RMap::identity, py::arg("arity"), py::arg("colors"))
        .def_static(
            "from_table",
            [](int arity, int colors, const std::vector<std::vector<int>>& rows) {
                std::vector<std::int32_t> flat;
                for (const auto& row : rows)
                    for (int v : row) flat.push_back(static_cast<std::int32_t>(v));
                return RMap(arity, colors, std::move(flat));
            },
            py::arg("arity"), py::arg("colors"), py::arg("outputs"))
        .def_static("parse", [](const std::string& text) { return RMap::parse(text); },
                    py::arg("text"))
        .def("serialize", &RMap::serialize)
        .def_property_readonly("arity", &RMap::arity)
        .def_property_readonly("colors", &RMap::colors)
        .def("is_bijective", &RMap::is_bijective)
        .def(
            "apply",
            [](const RMap& r, const std::vector<int>& in) { return r.apply(in); },
            py::arg("colors"))
        .def("__eq__", [](const RMap& a, const RMap& b) { return a == b; });

    m.def(
        "verify",
        [](const RMap& r, const std::string& mode, int threads) {
            SimplexCheckResult res = mode == "composition"
                                         ? check_n_simplex_composition(r, threads)
                                         : check_n_simplex(r, threads);
            return py::make_tuple(res.ok, res.counterexample
                                              ? py::cast(*res.counterexample)
                                              : py::none().cast<py::object>());
        },
        py::arg("rmap"), py::arg("mode") = "consistency", py::arg("threads") = 0,
        "Check the set-theoretic n-simplex equation; returns (ok, counterexample).");

    m.def(
        "propagate",
        [](const RMap& r, int N, const std::vector<int>& incoming, bool strict) {
            PermittedColoring c = propagate(r, N, incoming, strict);
            const auto& sched = schedule_for(N, r.arity());
            py::dict colors;
            for (std::size_t i = 0; i < sched.faces().size(); ++i)
                colors[py::str(sched.faces()[i].str())] = c.colors[i];
            py::dict out;
            out["colors"] = colors;
            out["incoming"] = c.incoming_tuple();
            out["outgoing"] = c.outgoing_tuple();
            return out;
        },
        py::arg("rmap"), py::arg("dim"), py::arg("incoming"), py::arg("strict") = false);

    // Cocycles.
    py::class_<Cocycle>(m, "Cocycle")
        .def_static("zero", &Cocycle::zero, py::arg("colors"), py::arg("modulus"))
        .def_static("parse", [](const std::string& text) { return Cocycle::parse(text); },
                    py::arg("text"))
        .def("serialize", &Cocycle::serialize)
        .def_readonly("colors", &Cocycle::colors)
        .def_readonly("modulus", &Cocycle::modulus)
        .def("__getitem__",
             [](const Cocycle& c, py::tuple abc) {
                 return c(abc[0].cast<int>(), abc[1].cast<int>(), abc[2].cast<int>());
             })
        .def("__setitem__",
             [](Cocycle& c, py::tuple abc, long long v) {
                 c.at(abc[0].cast<int>(), abc[1].cast<int>(), abc[2].cast<int>()) =
                     ((v % c.modulus) + c.modulus) % c.modulus;
             })
        .def("__eq__", [](const Cocycle& a, const Cocycle& b) { return a == b; });

    py::class_<Potential>(m, "Potential")
        .def_static("zero", &Potential::zero, py::arg("colors"), py::arg("modulus"))
        .def_static("parse",
                    [](const std::string& text) { return Potential::parse(text); },
                    py::arg("text"))
        .def("serialize", &Potential::serialize)
        .def_readonly("colors", &Potential::colors)
        .def_readonly("modulus", &Potential::modulus)
        .def_readwrite("table", &Potential::table)
        .def("__eq__", [](const Potential& a, const Potential& b) { return a == b; });

    m.def(
        "check_cocycle",
        [](const RMap& r, const Cocycle& phi, int threads) {
            CocycleCheckResult res = check_cocycle(r, phi, threads);
            return py::make_tuple(res.ok, res.counterexample
                                              ? py::cast(*res.counterexample)
                                              : py::none().cast<py::object>());
        },
        py::arg("rmap"), py::arg("cocycle"), py::arg("threads") = 0);
    m.def("coboundary_of", &coboundary_of, py::arg("rmap"), py::arg("potential"));
    m.def(
        "solve_coboundary",
        [](const RMap& r, const Cocycle& phi) {
            CoboundarySolution sol = solve_coboundary(r, phi);
            return py::make_tuple(sol.exists, sol.psi ? py::cast(*sol.psi)
                                                      : py::none().cast<py::object>());
        },
        py::arg("rmap"), py::arg("cocycle"));
    m.def("fixed_point_obstruction", &fixed_point_obstruction, py::arg("rmap"),
          py::arg("cocycle"));

    // Homology.
    m.def(
        "homology",
        [](const RMap& r, int max_dim, const std::string& field, bool normalized,
           const std::string& convention, int threads) {
            ChainOptions opts;
            opts.threads = threads;
            HomologyReport rep = homology(r, max_dim, field_from_string(field), normalized,
                                          convention_from_string(convention), opts);
            py::list rows;
            for (const auto& row : rep.rows) {
                py::dict d;
                d["degree"] = row.degree;
                d["dim"] = row.dim;
                d["rank_d"] = row.rank_out;
                d["rank_d_next"] = row.truncated ? py::none().cast<py::object>()
                                                 : py::cast(row.rank_in);
                d["betti"] = row.truncated ? py::none().cast<py::object>()
                                           : py::cast(row.betti);
                rows.append(d);
            }
            return rows;
        },
        py::arg("rmap"), py::arg("max_dim"), py::arg("field") = "q",
        py::arg("normalized") = false, py::arg("convention") = "alt",
        py::arg("threads") = 0);
    m.def(
        "verify_d_squared",
        [](const RMap& r, int N, const std::string& convention) {
            return verify_d_squared(r, N, convention_from_string(convention));
        },
        py::arg("rmap"), py::arg("dim"), py::arg("convention") = "alt");

    // Electric solution.
    py::class_<ResidueColorSet>(m, "ResidueColorSet")
        .def_static(
            "make",
            [](std::int64_t p, int k, py::object eps) {
                std::optional<std::int64_t> e;
                if (!eps.is_none()) e = eps.cast<std::int64_t>();
                return ResidueColorSet::make(p, k, e);
            },
            py::arg("p"), py::arg("k"), py::arg("epsilon") = py::none())
        .def_readonly("p", &ResidueColorSet::p)
        .def_readonly("k", &ResidueColorSet::k)
        .def_readonly("modulus", &ResidueColorSet::modulus)
        .def_readonly("epsilon", &ResidueColorSet::epsilon)
        .def_readonly("elements", &ResidueColorSet::elements)
        .def("color_of", &ResidueColorSet::color_of, py::arg("x"));

    py::class_<Character>(m, "Character")
        .def_readonly("order", &Character::order)
        .def_readonly("generator_values", &Character::generator_values)
        .def("__call__", [](const Character& c, std::int64_t u) { return c(u); })
        .def("is_trivial", &Character::is_trivial);

    m.def("electric_rmap", &electric_rmap, py::arg("color_set"));
    m.def("characters", &characters, py::arg("color_set"));
    m.def(
        "electric_cocycles",
        [](const ResidueColorSet& cs, const Character& eta) {
            ElectricCocycles cc = electric_cocycles(cs, eta);
            return py::make_tuple(cc.c1, cc.c2);
        },
        py::arg("color_set"), py::arg("character"));
    m.def("reduced_form_z25", &reduced_form_z25);
    m.def("reduced_form_z8", &reduced_form_z8);
    m.def(
        "nontriviality",
        [](const ResidueColorSet& cs, const Character& eta, int threads) {
            NontrivialityReport rep = nontriviality_report(cs, eta, threads);
            auto verdict = [](const CocycleVerdict& v) {
                py::dict d;
                d["cocycle_ok"] = v.cocycle_ok;
                d["is_coboundary"] = v.is_coboundary;
                d["witnesses"] = v.fixed_witnesses;
                return d;
            };
            py::dict d;
            d["c1"] = verdict(rep.c1);
            d["c2"] = verdict(rep.c2);
            return d;
        },
        py::arg("color_set"), py::arg("character"), py::arg("threads") = 0);

    // Quantum operators.
    py::class_<MonomialOperator>(m, "MonomialOperator")
        .def_readonly("arity", &MonomialOperator::arity)
        .def_readonly("colors", &MonomialOperator::colors)
        .def_readonly("modulus", &MonomialOperator::modulus)
        .def("is_invertible", &MonomialOperator::is_invertible)
        .def("serialize", &MonomialOperator::serialize)
        .def("__eq__",
             [](const MonomialOperator& a, const MonomialOperator& b) { return a == b; });
    m.def("permutation_operator", &permutation_operator, py::arg("rmap"),
          py::arg("modulus") = 1);
    m.def("twisted_operator", &twisted_operator, py::arg("rmap"), py::arg("cocycle"));
    m.def(
        "check_qte",
        [](const MonomialOperator& op) {
            QteCheckResult res = check_qte(op);
            return py::make_tuple(res.ok, res.counterexample
                                              ? py::cast(*res.counterexample)
                                              : py::none().cast<py::object>());
        },
        py::arg("operator"));
    m.def(
        "gauge_equivalent",
        [](const MonomialOperator& a, const MonomialOperator& b, const Potential& psi) {
            GaugeCheckResult res = gauge_equivalent(a, b, psi);
            return py::make_tuple(res.equivalent, res.reason);
        },
        py::arg("a"), py::arg("b"), py::arg("psi"));

    m.def(
        "run_reference_pipelines",
        [](int threads) {
            ReferenceResult res = run_reference_pipelines(threads);
            return py::make_tuple(res.ok, res.report);
        },
        py::arg("threads") = 0,
        "Full Z/25 and Z/8 pipelines against embedded golden values.");
}
