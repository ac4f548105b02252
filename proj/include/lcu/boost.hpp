// SPDX-License-Identifier: Apache-2.0
#ifndef LCU_BOOST_HPP
#define LCU_BOOST_HPP

#include "lcu/state.hpp"

namespace lcu {

// Boost velocity (units of c) plus light-cone translation.
struct FrameTransform {
    double beta = 0.0;
    double a = 0.0;
    double a0 = 0.0;
    double doppler = 1.0; // sqrt((1 - beta) / (1 + beta))
};

struct InvarianceReport {
    double beta = 0.0;
    double doppler = 0.0;
    // measured on the boosted state
    double mean_m = 0.0;
    double var_k_m = 0.0;
    double var_tau_m = 0.0;
    double product_m = 0.0;      // Omega of the boosted state
    double product_sqrt_m = 0.0; // Delta tau * Delta k of the boosted state
    // predicted from the rest-frame values and the scaling laws
    double mean_pred = 0.0;
    double var_k_pred = 0.0;
    double var_tau_pred = 0.0;
    double product_rest = 0.0;
    // relative deviations measured/predicted
    double dev_mean = 0.0;
    double dev_var_k = 0.0;
    double dev_var_tau = 0.0;
    double dev_product = 0.0;
};

struct CovarianceReport {
    double beta = 0.0;
    double a = 0.0;
    double a0 = 0.0;
    // max pointwise deviation of the transformed tau density against the
    // mapped original, tau' = (tau - (a - a0)) / D with Jacobian 1/D
    double dev_tau = 0.0;
    // same with the argument ordering D tau - (a - a0) as an alternative
    // reading; equals dev_tau when beta = 0
    double dev_tau_alt = 0.0;
    // max pointwise deviation of the boosted k density against D * p(D k)
    double dev_k = 0.0;
};

FrameTransform make_transform(double beta, double a, double a0);

// f_m(k) = sqrt(D) f(D k) realized exactly: nodes k_i -> k_i / D, amplitudes
// times sqrt(D); no interpolation. Requires |beta| < 1.
SpectralState boost_state(const SpectralState& state, double beta);

// Amplitude times the phase e^{i k (a - a0)}; momentum statistics unchanged,
// tau distribution shifted by a - a0.
SpectralState translate_state(const SpectralState& state, double a, double a0);

InvarianceReport invariance_report(const SpectralState& state, double beta);

// |mean_m - mean (1 + beta)| / mean for |beta| <= 0.05; bounded by
// beta^2 plus quadrature tolerance.
double doppler_small_beta_check(const SpectralState& state, double beta);

CovarianceReport covariance_check(const SpectralState& state, double beta,
                                  double a, double a0);

} // namespace lcu

#endif
