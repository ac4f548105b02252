// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcu/boost.hpp"
#include "lcu/errors.hpp"
#include "lcu/extremal.hpp"
#include "lcu/io.hpp"
#include "lcu/sampler.hpp"
#include "lcu/state.hpp"
#include "lcu/weber.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "minimum time-energy-uncertainty states on the half-line spectrum";

    py::register_exception<lcu::error>(m, "LcuError");

    py::class_<lcu::MomentumGrid>(m, "MomentumGrid")
        .def_property_readonly("k_max", &lcu::MomentumGrid::k_max)
        .def_readonly("n", &lcu::MomentumGrid::n)
        .def_readonly("nodes", &lcu::MomentumGrid::nodes)
        .def_readonly("weights", &lcu::MomentumGrid::weights);

    py::class_<lcu::TimeGrid>(m, "TimeGrid")
        .def_property_readonly("tau_min", &lcu::TimeGrid::tau_min)
        .def_property_readonly("tau_max", &lcu::TimeGrid::tau_max)
        .def_readonly("n", &lcu::TimeGrid::n)
        .def_readonly("nodes", &lcu::TimeGrid::nodes);

    py::class_<lcu::SpectralState>(m, "SpectralState")
        .def_readonly("grid", &lcu::SpectralState::grid)
        .def_readwrite("amp", &lcu::SpectralState::amp);

    py::class_<lcu::TimeAmplitude>(m, "TimeAmplitude")
        .def_readonly("grid", &lcu::TimeAmplitude::grid)
        .def_readonly("amp", &lcu::TimeAmplitude::amp);

    py::class_<lcu::Moments>(m, "Moments")
        .def_readonly("mean", &lcu::Moments::mean)
        .def_readonly("variance", &lcu::Moments::variance)
        .def_readonly("second_moment", &lcu::Moments::second_moment);

    py::class_<lcu::RootResult>(m, "RootResult")
        .def_readonly("mu", &lcu::RootResult::mu)
        .def_readonly("mu_squared", &lcu::RootResult::mu_squared)
        .def_readonly("nu", &lcu::RootResult::nu)
        .def_readonly("residual", &lcu::RootResult::residual)
        .def_readonly("iterations", &lcu::RootResult::iterations);

    py::class_<lcu::ExtremalParams>(m, "ExtremalParams")
        .def_readonly("mu", &lcu::ExtremalParams::mu)
        .def_readonly("nu", &lcu::ExtremalParams::nu)
        .def_readonly("a", &lcu::ExtremalParams::a)
        .def_readonly("b", &lcu::ExtremalParams::b)
        .def_readonly("c", &lcu::ExtremalParams::c)
        .def_readonly("scale", &lcu::ExtremalParams::scale);

    py::class_<lcu::ExtremalIntegrals>(m, "ExtremalIntegrals")
        .def_readonly("a", &lcu::ExtremalIntegrals::a)
        .def_readonly("b", &lcu::ExtremalIntegrals::b)
        .def_readonly("c", &lcu::ExtremalIntegrals::c);

    py::class_<lcu::MinimizeReport>(m, "MinimizeReport")
        .def_readonly("omega_min", &lcu::MinimizeReport::omega_min)
        .def_readonly("iterations", &lcu::MinimizeReport::iterations)
        .def_readonly("grad_norm", &lcu::MinimizeReport::grad_norm)
        .def_readonly("state", &lcu::MinimizeReport::state);

    py::class_<lcu::InvarianceReport>(m, "InvarianceReport")
        .def_readonly("beta", &lcu::InvarianceReport::beta)
        .def_readonly("doppler", &lcu::InvarianceReport::doppler)
        .def_readonly("mean_m", &lcu::InvarianceReport::mean_m)
        .def_readonly("var_k_m", &lcu::InvarianceReport::var_k_m)
        .def_readonly("var_tau_m", &lcu::InvarianceReport::var_tau_m)
        .def_readonly("product_m", &lcu::InvarianceReport::product_m)
        .def_readonly("product_sqrt_m", &lcu::InvarianceReport::product_sqrt_m)
        .def_readonly("mean_pred", &lcu::InvarianceReport::mean_pred)
        .def_readonly("var_k_pred", &lcu::InvarianceReport::var_k_pred)
        .def_readonly("var_tau_pred", &lcu::InvarianceReport::var_tau_pred)
        .def_readonly("product_rest", &lcu::InvarianceReport::product_rest)
        .def_readonly("dev_mean", &lcu::InvarianceReport::dev_mean)
        .def_readonly("dev_var_k", &lcu::InvarianceReport::dev_var_k)
        .def_readonly("dev_var_tau", &lcu::InvarianceReport::dev_var_tau)
        .def_readonly("dev_product", &lcu::InvarianceReport::dev_product);

    py::class_<lcu::MomentEstimate>(m, "MomentEstimate")
        .def_readonly("mean", &lcu::MomentEstimate::mean)
        .def_readonly("variance", &lcu::MomentEstimate::variance)
        .def_readonly("se_mean", &lcu::MomentEstimate::se_mean)
        .def_readonly("se_variance", &lcu::MomentEstimate::se_variance)
        .def_readonly("count", &lcu::MomentEstimate::count);

    py::enum_<lcu::SampleKind>(m, "SampleKind")
        .value("momentum", lcu::SampleKind::momentum)
        .value("tau", lcu::SampleKind::tau);

    py::class_<lcu::SampleBatch>(m, "SampleBatch")
        .def_readonly("values", &lcu::SampleBatch::values)
        .def_readonly("seed", &lcu::SampleBatch::seed)
        .def_readonly("kind", &lcu::SampleBatch::kind);

    m.def("make_momentum_grid", &lcu::make_momentum_grid, py::arg("k_max"), py::arg("n"));
    m.def("make_time_grid", &lcu::make_time_grid, py::arg("tau_min"), py::arg("tau_max"),
          py::arg("m"));
    m.def("make_gaussian", &lcu::make_gaussian, py::arg("kbar"), py::arg("sigma"),
          py::arg("grid"));
    m.def("random_smooth_state", &lcu::random_smooth_state, py::arg("seed"), py::arg("grid"));
    m.def("normalize", &lcu::normalize, py::arg("state"));
    m.def("norm_squared", py::overload_cast<const lcu::SpectralState&>(&lcu::norm_squared),
          py::arg("state"));
    m.def("momentum_moments", &lcu::momentum_moments, py::arg("state"));
    m.def("time_amplitude", &lcu::time_amplitude, py::arg("state"), py::arg("tgrid"));
    m.def("time_moments", &lcu::time_moments, py::arg("ta"));
    m.def("time_variance_spectral", &lcu::time_variance_spectral, py::arg("state"));
    m.def("omega", &lcu::omega, py::arg("state"));

    m.def("ln_gamma", [](double x) { const auto r = lcu::ln_gamma(x);
                                     return py::make_tuple(r.value, r.sign); },
          py::arg("x"));
    m.def("kummer_m", &lcu::kummer_m, py::arg("a"), py::arg("b"), py::arg("z"));
    m.def("pcf_d", &lcu::pcf_d, py::arg("nu"), py::arg("x"));
    m.def("pcf_d_prime", &lcu::pcf_d_prime, py::arg("nu"), py::arg("x"));
    m.def("pcf_d_integral", &lcu::pcf_d_integral, py::arg("nu"), py::arg("x"));
    m.def("solve_mu", &lcu::solve_mu, py::arg("bracket_lo") = lcu::kMuBracketLo,
          py::arg("bracket_hi") = lcu::kMuBracketHi, py::arg("tol") = 1e-10);

    m.def("build_extremal", &lcu::build_extremal, py::arg("mu"), py::arg("c"),
          py::arg("grid"));
    m.def("extremal_integrals", &lcu::extremal_integrals, py::arg("state"));
    m.def("check_euler_lagrange", &lcu::check_euler_lagrange, py::arg("state"),
          py::arg("params"));
    m.def("minimize_omega",
          [](const lcu::SpectralState& init, double step, int max_iter, double grad_tol) {
              return lcu::minimize_omega(init, step, max_iter, grad_tol);
          },
          py::arg("init"), py::arg("step") = 0.1, py::arg("max_iter") = 200000,
          py::arg("grad_tol") = 1e-7);

    m.def("boost_state", &lcu::boost_state, py::arg("state"), py::arg("beta"));
    m.def("translate_state", &lcu::translate_state, py::arg("state"), py::arg("a"),
          py::arg("a0"));
    m.def("invariance_report", &lcu::invariance_report, py::arg("state"), py::arg("beta"));
    m.def("doppler_small_beta_check", &lcu::doppler_small_beta_check, py::arg("state"),
          py::arg("beta"));

    m.def("sample_momentum", &lcu::sample_momentum, py::arg("state"), py::arg("count"),
          py::arg("seed"));
    m.def("sample_tau", &lcu::sample_tau, py::arg("state"), py::arg("tgrid"),
          py::arg("count"), py::arg("seed"));
    m.def("estimate_moments", &lcu::estimate_moments, py::arg("batch"));

    m.def("read_state", &lcu::read_state_file, py::arg("path"));
    m.def("write_state", &lcu::write_state_file, py::arg("state"), py::arg("path"));
}
