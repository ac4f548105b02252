// SPDX-License-Identifier: Apache-2.0
#include "lcu/boost.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lcu/errors.hpp"

namespace lcu {

namespace {

double doppler_factor(double beta) {
    if (!(std::abs(beta) < 1.0))
        fail(errc::domain, "|beta| must be < 1, got " + std::to_string(beta));
    return std::sqrt((1.0 - beta) / (1.0 + beta));
}

// tau window wide enough for the state, centered on the spectral estimate
TimeGrid auto_time_grid(const SpectralState& state, double shift) {
    const double spread = std::sqrt(time_variance_spectral(state));
    const double half = 10.0 * spread;
    const std::size_t m = 2001;
    return make_time_grid(shift - half, shift + half, m);
}

} // namespace

FrameTransform make_transform(double beta, double a, double a0) {
    FrameTransform t;
    t.beta = beta;
    t.a = a;
    t.a0 = a0;
    t.doppler = doppler_factor(beta);
    return t;
}

SpectralState boost_state(const SpectralState& state, double beta) {
    const double d = doppler_factor(beta);
    require_normalized(state);
    SpectralState out;
    out.grid = make_momentum_grid(state.grid.k_max() / d, state.grid.n);
    const double sq = std::sqrt(d);
    out.amp.resize(state.amp.size());
    for (std::size_t i = 0; i < state.amp.size(); ++i)
        out.amp[i] = sq * state.amp[i];
    return out;
}

SpectralState translate_state(const SpectralState& state, double a, double a0) {
    require_normalized(state);
    SpectralState out = state;
    const double shift = a - a0;
    for (std::size_t i = 0; i < out.amp.size(); ++i) {
        const double phase = state.grid.nodes[i] * shift;
        out.amp[i] *= cdouble(std::cos(phase), std::sin(phase));
    }
    return out;
}

InvarianceReport invariance_report(const SpectralState& state, double beta) {
    InvarianceReport r;
    r.beta = beta;
    r.doppler = doppler_factor(beta);
    const Moments rest = momentum_moments(state);
    const double tvs_rest = time_variance_spectral(state);
    const SpectralState boosted = boost_state(state, beta);
    const Moments m = momentum_moments(boosted);
    const double tvs_m = time_variance_spectral(boosted);
    const double blue = 1.0 / r.doppler; // sqrt((1+beta)/(1-beta))
    r.mean_m = m.mean;
    r.var_k_m = m.variance;
    r.var_tau_m = tvs_m;
    r.product_m = tvs_m * m.variance;
    r.product_sqrt_m = std::sqrt(std::max(0.0, r.product_m));
    r.mean_pred = rest.mean * blue;
    r.var_k_pred = rest.variance * blue * blue;
    r.var_tau_pred = tvs_rest * r.doppler * r.doppler;
    r.product_rest = tvs_rest * rest.variance;
    auto rel = [](double measured, double predicted) {
        const double scale = std::max(std::abs(predicted), 1e-300);
        return std::abs(measured - predicted) / scale;
    };
    r.dev_mean = rel(r.mean_m, r.mean_pred);
    r.dev_var_k = rel(r.var_k_m, r.var_k_pred);
    r.dev_var_tau = rel(r.var_tau_m, r.var_tau_pred);
    r.dev_product = rel(r.product_m, r.product_rest);
    return r;
}

double doppler_small_beta_check(const SpectralState& state, double beta) {
    if (std::abs(beta) > 0.05)
        fail(errc::domain, "doppler_small_beta_check expects |beta| <= 0.05");
    const Moments rest = momentum_moments(state);
    const Moments m = momentum_moments(boost_state(state, beta));
    return std::abs(m.mean - rest.mean * (1.0 + beta)) / rest.mean;
}

CovarianceReport covariance_check(const SpectralState& state, double beta, double a,
                                  double a0) {
    require_normalized(state);
    const FrameTransform t = make_transform(beta, a, a0);
    const double d = t.doppler;
    const double shift = a - a0;
    CovarianceReport rep;
    rep.beta = beta;
    rep.a = a;
    rep.a0 = a0;

    const SpectralState moved = translate_state(boost_state(state, beta), a, a0);

    // (i) tau densities. The transformed density and the original density
    // evaluated at tau' = (tau - shift) / d, Jacobian 1/d, must agree. The
    // alternative reading tau' = d tau - shift with Jacobian d is reported
    // alongside.
    const TimeGrid tg = auto_time_grid(moved, shift);
    const TimeAmplitude ta_m = time_amplitude(moved, tg);
    std::vector<double> tau_mapped(tg.n), tau_alt(tg.n);
    for (std::size_t i = 0; i < tg.n; ++i) {
        tau_mapped[i] = (tg.nodes[i] - shift) / d;
        tau_alt[i] = d * tg.nodes[i] - shift;
    }
    const auto orig_mapped = time_amplitude_at(state, tau_mapped);
    const auto orig_alt = time_amplitude_at(state, tau_alt);
    double peak = 0.0;
    for (const auto& v : ta_m.amp)
        peak = std::max(peak, std::norm(v));
    if (!(peak > 0.0))
        fail(errc::degenerate, "transformed time density vanishes");
    double dev = 0.0, dev_alt = 0.0;
    for (std::size_t i = 0; i < tg.n; ++i) {
        const double pm = std::norm(ta_m.amp[i]);
        dev = std::max(dev, std::abs(pm - std::norm(orig_mapped[i]) / d));
        dev_alt = std::max(dev_alt, std::abs(pm - std::norm(orig_alt[i]) * d));
    }
    rep.dev_tau = dev / peak;
    rep.dev_tau_alt = dev_alt / peak;

    // (ii) k densities: p_m(k) = d * p(d k) on the boosted state's support.
    const SpectralState boosted = boost_state(state, beta);
    double devk = 0.0, peakk = 0.0;
    for (std::size_t i = 0; i < boosted.grid.n; ++i) {
        const double pm = std::norm(boosted.amp[i]);
        const double po = std::norm(state.amp[i]); // node i of the original is d * k_i
        peakk = std::max(peakk, pm);
        devk = std::max(devk, std::abs(pm - d * po));
    }
    if (!(peakk > 0.0))
        fail(errc::degenerate, "boosted momentum density vanishes");
    rep.dev_k = devk / peakk;
    return rep;
}

} // namespace lcu
