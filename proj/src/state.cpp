// SPDX-License-Identifier: Apache-2.0
#include "lcu/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lcu/errors.hpp"
#include "lcu/sampler.hpp"

namespace lcu {

namespace {

std::vector<double> abs_squared(const std::vector<cdouble>& amp) {
    std::vector<double> d(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i)
        d[i] = std::norm(amp[i]);
    return d;
}

void require_match(const SpectralState& state) {
    if (state.amp.size() != state.grid.n)
        fail(errc::dimension, "state amplitude length " + std::to_string(state.amp.size()) +
                                  " does not match grid size " + std::to_string(state.grid.n));
}

} // namespace

double norm_squared(const SpectralState& state) {
    require_match(state);
    return quadrature(abs_squared(state.amp), state.grid);
}

double norm_squared(const TimeAmplitude& ta) {
    return quadrature(abs_squared(ta.amp), ta.grid);
}

double boundary_ratio(const SpectralState& state) {
    require_match(state);
    double peak = 0.0;
    for (const auto& a : state.amp)
        peak = std::max(peak, std::abs(a));
    if (peak == 0.0)
        return 0.0;
    return std::abs(state.amp.back()) / peak;
}

bool cutoff_warning(const SpectralState& state) {
    return boundary_ratio(state) > kBoundaryWarnRatio;
}

SpectralState normalize(const SpectralState& state) {
    const double n2 = norm_squared(state);
    if (!(n2 > 0.0))
        fail(errc::degenerate, "cannot normalize a zero-amplitude state");
    SpectralState out = state;
    const double s = 1.0 / std::sqrt(n2);
    for (auto& a : out.amp)
        a *= s;
    return out;
}

void require_normalized(const SpectralState& state) {
    const double n2 = norm_squared(state);
    if (std::abs(n2 - 1.0) > 1e-6)
        fail(errc::contract,
             "state is not normalized: |f|^2 integrates to " + std::to_string(n2));
}

Moments momentum_moments(const SpectralState& state) {
    require_normalized(state);
    const auto dens = abs_squared(state.amp);
    std::vector<double> kd(dens.size());
    for (std::size_t i = 0; i < dens.size(); ++i)
        kd[i] = state.grid.nodes[i] * dens[i];
    const double mean = quadrature(kd, state.grid);
    for (std::size_t i = 0; i < dens.size(); ++i)
        kd[i] *= state.grid.nodes[i];
    const double second = quadrature(kd, state.grid);
    Moments m;
    m.mean = mean;
    m.second_moment = second;
    double var = second - mean * mean;
    if (var < 0.0) {
        if (var < -1e-12)
            fail(errc::precision, "negative momentum variance " + std::to_string(var));
        var = 0.0;
    }
    m.variance = var;
    return m;
}

std::vector<cdouble> time_amplitude_at(const SpectralState& state,
                                       const std::vector<double>& taus) {
    require_match(state);
    const double pref = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    std::vector<cdouble> out(taus.size());
    for (std::size_t j = 0; j < taus.size(); ++j) {
        cdouble s = 0.0;
        const double tau = taus[j];
        for (std::size_t i = 0; i < state.grid.n; ++i) {
            const double phase = -state.grid.nodes[i] * tau;
            s += state.grid.weights[i] * state.amp[i] *
                 cdouble(std::cos(phase), std::sin(phase));
        }
        out[j] = pref * s;
    }
    return out;
}

TimeAmplitude time_amplitude(const SpectralState& state, const TimeGrid& tgrid) {
    require_normalized(state);
    TimeAmplitude ta;
    ta.grid = tgrid;
    ta.amp = time_amplitude_at(state, tgrid.nodes);
    return ta;
}

Moments time_moments(const TimeAmplitude& ta) {
    const auto dens = abs_squared(ta.amp);
    double peak = 0.0;
    for (double d : dens)
        peak = std::max(peak, d);
    if (!(peak > 0.0))
        fail(errc::degenerate, "time density vanishes everywhere");
    const double edge = std::max(dens.front(), dens.back());
    if (edge > 1e-8 * peak)
        fail(errc::window, "tau window too small: boundary density ratio " +
                               std::to_string(edge / peak));
    std::vector<double> td(dens.size());
    for (std::size_t i = 0; i < dens.size(); ++i)
        td[i] = ta.grid.nodes[i] * dens[i];
    const double mean = quadrature(td, ta.grid);
    for (std::size_t i = 0; i < dens.size(); ++i)
        td[i] *= ta.grid.nodes[i];
    const double second = quadrature(td, ta.grid);
    Moments m;
    m.mean = mean;
    m.second_moment = second;
    double var = second - mean * mean;
    if (var < 0.0) {
        if (var < -1e-12)
            fail(errc::precision, "negative time variance " + std::to_string(var));
        var = 0.0;
    }
    m.variance = var;
    return m;
}

double time_variance_spectral(const SpectralState& state) {
    require_normalized(state);
    const std::size_t n = state.grid.n;
    if (n < 5)
        fail(errc::resolution, "time_variance_spectral needs n >= 5");
    const double h = state.grid.spacing();
    std::vector<double> d2(n);
    const auto& f = state.amp;
    d2[0] = std::norm((-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h));
    for (std::size_t i = 1; i + 1 < n; ++i)
        d2[i] = std::norm((f[i + 1] - f[i - 1]) / (2.0 * h));
    d2[n - 1] = std::norm((3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h));
    return quadrature(d2, state.grid);
}

double omega(const SpectralState& state) {
    const Moments m = momentum_moments(state);
    return time_variance_spectral(state) * m.variance;
}

SpectralState make_gaussian(double kbar, double sigma, const MomentumGrid& grid) {
    if (!(sigma > 0.0))
        fail(errc::domain, "sigma must be positive");
    SpectralState s;
    s.grid = grid;
    s.amp.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double u = (grid.nodes[i] - kbar) / (2.0 * sigma);
        s.amp[i] = std::exp(-u * u);
    }
    return normalize(s);
}

SpectralState random_smooth_state(std::uint64_t seed, const MomentumGrid& grid) {
    SplitMix64 rng(seed);
    const std::size_t bumps = 3 + static_cast<std::size_t>(rng.next() % 6);
    std::vector<double> center(bumps), width(bumps), height(bumps);
    for (std::size_t b = 0; b < bumps; ++b) {
        center[b] = grid.k_max() * (0.20 + 0.35 * rng.uniform());
        width[b] = grid.k_max() * (0.03 + 0.05 * rng.uniform());
        height[b] = 0.2 + 0.8 * rng.uniform();
    }
    SpectralState s;
    s.grid = grid;
    s.amp.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double v = 0.0;
        for (std::size_t b = 0; b < bumps; ++b) {
            const double u = (grid.nodes[i] - center[b]) / width[b];
            v += height[b] * std::exp(-0.5 * u * u);
        }
        s.amp[i] = v;
    }
    return normalize(s);
}

SpectralState resample(const SpectralState& state, const MomentumGrid& grid) {
    require_match(state);
    SpectralState out;
    out.grid = grid;
    out.amp.resize(grid.n);
    const auto& src = state.grid;
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double k = grid.nodes[j];
        if (k <= src.nodes.front() || k >= src.nodes.back()) {
            out.amp[j] = (k < src.nodes.front() || k > src.nodes.back())
                             ? cdouble(0.0)
                             : (k == src.nodes.front() ? state.amp.front() : state.amp.back());
            continue;
        }
        const double h = src.spacing();
        std::size_t i = std::min(static_cast<std::size_t>((k - src.lo) / h), src.n - 2);
        const double t = (k - src.nodes[i]) / (src.nodes[i + 1] - src.nodes[i]);
        out.amp[j] = (1.0 - t) * state.amp[i] + t * state.amp[i + 1];
    }
    return out;
}

} // namespace lcu
