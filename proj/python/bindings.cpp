// Copyright 2026 The srmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srmkit/analysis.hpp"
#include "srmkit/constellations.hpp"
#include "srmkit/datasets.hpp"
#include "srmkit/error.hpp"
#include "srmkit/gram_file.hpp"
#include "srmkit/gus.hpp"
#include "srmkit/linalg.hpp"
#include "srmkit/srm.hpp"

namespace py = pybind11;
using namespace srmkit;

namespace {

std::string serialize(const Dataset &data, const std::string &format) {
    if (format == "csv") {
        return to_csv(data);
    }
    if (format == "json") {
        return to_json(data);
    }
    throw Error(ErrorKind::InvalidArgument, "format must be csv or json");
}

PhotonGrid grid_from(const std::string &text) { return PhotonGrid::parse(text); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Square-root measurement and optimal discrimination of pure-state constellations";

    py::register_exception<Error>(m, "SrmkitError", PyExc_ValueError);

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("herm", &Tolerances::herm)
        .def_readwrite("psd", &Tolerances::psd)
        .def_readwrite("recon", &Tolerances::recon)
        .def_readwrite("cond", &Tolerances::cond);

    // linalg
    m.def("hermitian_eig", [](const ComplexMatrix &a, const Tolerances &tol) {
        auto e = hermitian_eig(a, tol);
        return py::make_tuple(e.eigenvalues, e.eigenvectors);
    }, py::arg("matrix"), py::arg("tol") = Tolerances{});
    m.def("principal_sqrt", &principal_sqrt, py::arg("matrix"), py::arg("tol") = Tolerances{});
    m.def("is_psd", [](const ComplexMatrix &a, double tol) {
        auto r = is_psd(a, tol);
        return py::make_tuple(r.psd, r.min_eigenvalue);
    }, py::arg("matrix"), py::arg("tol") = Tolerances{}.psd);
    m.def("circulant_eigenvalues", [](const ComplexVector &row) { return circulant_eigenvalues(CirculantSpec(row)); },
          py::arg("first_row"));
    m.def("circulant_from_eigenvalues", [](const ComplexVector &ev) { return circulant_from_eigenvalues(ev).first_row(); },
          py::arg("eigenvalues"));
    m.def("fourier_matrix", &fourier_matrix, py::arg("m"));

    // constellations
    m.def("coherent_inner", &coherent_inner, py::arg("alpha"), py::arg("beta"));
    py::class_<Constellation>(m, "Constellation")
        .def(py::init<std::vector<double>, const ComplexMatrix &, std::vector<std::string>>(), py::arg("priors"),
             py::arg("overlaps"), py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("priors", &Constellation::priors)
        .def_property_readonly("overlaps", &Constellation::overlaps)
        .def_property_readonly("labels", &Constellation::labels)
        .def("__len__", &Constellation::size);
    m.def("weighted_gram", &weighted_gram, py::arg("constellation"));
    py::class_<GusEnsemble>(m, "GusEnsemble")
        .def_property_readonly("s", &GusEnsemble::s)
        .def_property_readonly("m", &GusEnsemble::m)
        .def_property_readonly("constellation_priors", &GusEnsemble::constellation_priors)
        .def_property_readonly("base", &GusEnsemble::base)
        .def("gram", &GusEnsemble::gram)
        .def("gram_block", &GusEnsemble::gram_block, py::arg("h"), py::arg("k"));
    m.def("make_psk", &make_psk, py::arg("m"), py::arg("alpha"));
    m.def("make_double_bpsk", &make_double_bpsk, py::arg("alpha"), py::arg("beta"), py::arg("p"));
    m.def("make_ppm", &make_ppm, py::arg("m"), py::arg("alpha"));
    m.def("make_ppm_ensemble", &make_ppm_ensemble, py::arg("m"), py::arg("alpha"));
    m.def("make_double_ppm", &make_double_ppm, py::arg("m"), py::arg("alpha"));

    // srm
    py::class_<SrmResult>(m, "SrmResult")
        .def_readonly("factor", &SrmResult::factor)
        .def_readonly("joint", &SrmResult::joint)
        .def_readonly("per_state_correct", &SrmResult::per_state_correct)
        .def_readonly("pc", &SrmResult::pc);
    py::class_<OptimalityVerdict>(m, "OptimalityVerdict")
        .def_readonly("optimal", &OptimalityVerdict::optimal)
        .def_property_readonly("method", [](const OptimalityVerdict &v) { return std::string(to_string(v.method)); })
        .def_readonly("boundary", &OptimalityVerdict::boundary)
        .def_readonly("min_eigenvalue", &OptimalityVerdict::min_eigenvalue)
        .def_readonly("max_residual", &OptimalityVerdict::max_residual)
        .def_readonly("witness", &OptimalityVerdict::witness)
        .def("__bool__", [](const OptimalityVerdict &v) { return v.optimal; });
    py::class_<ChannelStats>(m, "ChannelStats")
        .def_readonly("joint", &ChannelStats::joint)
        .def_readonly("input_marginals", &ChannelStats::input_marginals)
        .def_readonly("output_marginals", &ChannelStats::output_marginals)
        .def_readonly("mutual_info_bits", &ChannelStats::mutual_info_bits);
    m.def("srm", &srm, py::arg("gram"), py::arg("tol") = Tolerances{});
    m.def("check_factor_conditions", &check_factor_conditions, py::arg("factor"), py::arg("tol") = Tolerances{});
    m.def("check_block_sqrt_diagonal", &check_block_sqrt_diagonal, py::arg("gram"), py::arg("blocks"),
          py::arg("tol") = Tolerances{});
    m.def("verify_optimality_oracle", &verify_optimality_oracle, py::arg("gram"), py::arg("factor"),
          py::arg("tol") = Tolerances{});
    m.def("channel_stats", &channel_stats, py::arg("result"));

    // gus
    py::class_<BlockSpectrum>(m, "BlockSpectrum")
        .def_property_readonly("s", &BlockSpectrum::s)
        .def_property_readonly("m", &BlockSpectrum::m)
        .def("block", &BlockSpectrum::block, py::arg("h"), py::arg("k"))
        .def("d_block", &BlockSpectrum::d_block, py::arg("j"))
        .def("to_dense", &BlockSpectrum::to_dense);
    py::class_<TraceCriterion>(m, "TraceCriterion")
        .def_readonly("g", &TraceCriterion::g)
        .def_readonly("spread", &TraceCriterion::spread)
        .def_readonly("equal", &TraceCriterion::equal)
        .def_readonly("pc_if_optimal", &TraceCriterion::pc_if_optimal);
    m.def("block_diagonalize", &block_diagonalize, py::arg("ensemble"));
    m.def("block_sqrt", &block_sqrt, py::arg("spectrum"), py::arg("tol") = Tolerances{});
    m.def("trace_criterion", &trace_criterion, py::arg("sqrt_spectrum"), py::arg("tol") = Tolerances{});
    m.def("fast_srm", [](const GusEnsemble &e, const Tolerances &tol) {
        auto r = fast_srm(e, tol);
        return py::make_tuple(r.result, r.g);
    }, py::arg("ensemble"), py::arg("tol") = Tolerances{});

    // analysis
    m.def("pc_double_bpsk_equal_amp", [](double alpha, double delta) {
        auto v = pc_double_bpsk_equal_amp(alpha, delta);
        return py::make_tuple(v.value, v.degenerate);
    }, py::arg("alpha"), py::arg("delta"));
    m.def("pam4_trace_gap", &pam4_trace_gap, py::arg("alpha"), py::arg("p"));
    m.def("optimize_prior_4pam", [](double alpha) {
        auto r = optimize_prior_4pam(alpha);
        return py::make_tuple(r.p_star, r.gap, r.certificate.optimal);
    }, py::arg("alpha"));
    m.def("ppm_closed_form", [](std::size_t mm, double alpha) {
        auto r = ppm_closed_form(mm, alpha);
        py::dict d;
        d["c0"] = r.c0;
        d["c1"] = r.c1;
        d["pc"] = r.pc;
        d["degenerate"] = r.degenerate;
        return d;
    }, py::arg("m"), py::arg("alpha"));
    m.def("double_ppm_closed_form", [](std::size_t mm, double alpha) {
        auto r = double_ppm_closed_form(mm, alpha);
        py::dict d;
        d["nu0"] = r.nu0;
        d["nu1"] = r.nu1;
        d["xi0"] = r.xi0;
        d["xi1"] = r.xi1;
        d["r0"] = r.r0;
        d["t0"] = r.t0;
        d["r_off"] = r.r_off;
        d["pc"] = r.pc;
        d["degenerate"] = r.degenerate;
        return d;
    }, py::arg("m"), py::arg("alpha"));
    m.def("mutual_info_ppm", &mutual_info_ppm, py::arg("m"), py::arg("alpha"));
    m.def("mutual_info_double_ppm", &mutual_info_double_ppm, py::arg("m"), py::arg("alpha"));

    // datasets and checks, serialized exactly as the CLI writes them
    m.def("fig1", [](const std::string &grid, const std::string &deltas, const std::string &format) {
        return serialize(fig1_dataset(grid_from(grid), deltas.empty() ? default_fig1_deltas() : parse_angle_list(deltas)),
                         format);
    }, py::arg("grid") = "0.1:10:100", py::arg("deltas") = "", py::arg("format") = "csv");
    m.def("fig2", [](const std::string &grid, const std::string &format) {
        return serialize(pam4_dataset(grid_from(grid)), format);
    }, py::arg("grid") = "0.1:10:100", py::arg("format") = "csv");
    m.def("fig4", [](const std::string &grid, std::vector<std::size_t> ms, const std::string &format) {
        return serialize(ppm_dataset(grid_from(grid), ms), format);
    }, py::arg("grid") = "0.1:20:200", py::arg("m") = std::vector<std::size_t>{2, 16}, py::arg("format") = "csv");
    m.def("check", [](const std::string &text, const std::string &format) {
        auto report = run_check(parse_gram_text(text));
        return format == "json" ? format_check_json(report) : format_check_text(report);
    }, py::arg("gram_text"), py::arg("format") = "text");
}
