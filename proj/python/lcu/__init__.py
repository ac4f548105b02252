# SPDX-License-Identifier: Apache-2.0
"""Minimum time-energy-uncertainty states on the half-line momentum spectrum."""

from ._core import (
    ExtremalIntegrals,
    ExtremalParams,
    InvarianceReport,
    LcuError,
    MinimizeReport,
    MomentEstimate,
    Moments,
    MomentumGrid,
    RootResult,
    SampleBatch,
    SampleKind,
    SpectralState,
    TimeAmplitude,
    TimeGrid,
    boost_state,
    build_extremal,
    check_euler_lagrange,
    doppler_small_beta_check,
    estimate_moments,
    extremal_integrals,
    invariance_report,
    kummer_m,
    ln_gamma,
    make_gaussian,
    make_momentum_grid,
    make_time_grid,
    minimize_omega,
    momentum_moments,
    norm_squared,
    normalize,
    omega,
    pcf_d,
    pcf_d_integral,
    pcf_d_prime,
    random_smooth_state,
    read_state,
    sample_momentum,
    sample_tau,
    solve_mu,
    time_amplitude,
    time_moments,
    time_variance_spectral,
    translate_state,
    write_state,
)

__all__ = [
    "ExtremalIntegrals",
    "ExtremalParams",
    "InvarianceReport",
    "LcuError",
    "MinimizeReport",
    "MomentEstimate",
    "Moments",
    "MomentumGrid",
    "RootResult",
    "SampleBatch",
    "SampleKind",
    "SpectralState",
    "TimeAmplitude",
    "TimeGrid",
    "boost_state",
    "build_extremal",
    "check_euler_lagrange",
    "doppler_small_beta_check",
    "estimate_moments",
    "extremal_integrals",
    "invariance_report",
    "kummer_m",
    "ln_gamma",
    "make_gaussian",
    "make_momentum_grid",
    "make_time_grid",
    "minimize_omega",
    "momentum_moments",
    "norm_squared",
    "normalize",
    "omega",
    "pcf_d",
    "pcf_d_integral",
    "pcf_d_prime",
    "random_smooth_state",
    "read_state",
    "sample_momentum",
    "sample_tau",
    "solve_mu",
    "time_amplitude",
    "time_moments",
    "time_variance_spectral",
    "translate_state",
    "write_state",
]

__version__ = "0.1.0"
