#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "besov_inflate/cutoff.hpp"
#include "besov_inflate/experiment.hpp"
#include "besov_inflate/initial_data.hpp"
#include "besov_inflate/lp.hpp"
#include "besov_inflate/solver.hpp"

namespace py = pybind11;
using namespace besov;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Littlewood-Paley / Camassa-Holm norm-inflation toolkit";

    py::register_exception<Error>(m, "ToolkitError");

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init(&GridSpec::make), py::arg("length"), py::arg("point_count"))
        .def_readonly("length", &GridSpec::length)
        .def_readonly("point_count", &GridSpec::point_count)
        .def("spacing", &GridSpec::spacing)
        .def("nyquist", &GridSpec::nyquist);

    py::class_<Field>(m, "Field")
        .def_static("from_samples", &Field::from_samples)
        .def_static("zeros", &Field::zeros)
        .def_static("sample", &Field::sample)
        .def("samples", &Field::samples)
        .def("derivative", &Field::derivative)
        .def("max_abs", &Field::max_abs)
        .def("__add__", &Field::operator+)
        .def("__sub__", &Field::operator-)
        .def("scaled", &Field::scaled);

    py::class_<CutoffPair>(m, "CutoffPair")
        .def("chi", &CutoffPair::chi)
        .def("phi", &CutoffPair::phi);
    m.def("make_cutoff", &make_cutoff, py::arg("transition_profile") = 1.0);

    py::class_<lp::BesovIndex>(m, "BesovIndex")
        .def(py::init([](double s, double p, double r) {
                 return lp::BesovIndex{s, p, r};
             }),
             py::arg("s"), py::arg("p"), py::arg("r"));
    m.def("dyadic_block", &lp::dyadic_block, py::arg("f"), py::arg("j"),
          py::arg("strict") = false);
    m.def("besov_norm", &lp::besov_norm);
    m.def("besov_norm_restricted", &lp::besov_norm_restricted);
    m.def("lebesgue_norm", &lebesgue_norm);
    m.def("lipschitz_norm", &lipschitz_norm);
    m.def("commutator", &lp::commutator);

    py::class_<ConstructionParams>(m, "ConstructionParams")
        .def_static("make", &ConstructionParams::make, py::arg("n"),
                    py::arg("p") = 4.0)
        .def_readonly("n", &ConstructionParams::n)
        .def_readonly("gamma", &ConstructionParams::gamma)
        .def_readonly("p", &ConstructionParams::p)
        .def("prefactor", &ConstructionParams::prefactor);
    m.def("freq_set", &freq_set);
    m.def("inflation_grid", &inflation_grid);
    m.def("recenter_offset", &recenter_offset);
    m.def("build_u0", &build_u0, py::arg("params"), py::arg("grid"),
          py::arg("recenter") = 0.0);

    py::class_<Lemma31Norms>(m, "Lemma31Norms")
        .def_readonly("linf_u0", &Lemma31Norms::linf_u0)
        .def_readonly("linf_dxu0", &Lemma31Norms::linf_dxu0)
        .def_readonly("besov_b1p1", &Lemma31Norms::besov_b1p1)
        .def_readonly("l1_u0", &Lemma31Norms::l1_u0);
    m.def("lemma31_norms", &lemma31_norms, py::arg("params"),
          py::arg("grid") = std::nullopt);

    py::class_<Lemma32Result>(m, "Lemma32Result")
        .def_readonly("value", &Lemma32Result::value)
        .def_readonly("log2n_ratio", &Lemma32Result::log2n_ratio)
        .def_readonly("per_block", &Lemma32Result::per_block);
    m.def("lemma32_lower", &lemma32_lower, py::arg("params"),
          py::arg("grid") = std::nullopt);

    m.def("helmholtz_solve", &helmholtz_solve);
    m.def("ch_rhs", [](const Field& u) { return ch_rhs(u); });
    m.def("h1_energy", &h1_energy);
    m.def("compute_E", &compute_E);
    m.def("compute_F", &compute_F);
    m.def("compute_G", &compute_G);
}
