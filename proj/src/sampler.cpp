// SPDX-License-Identifier: Apache-2.0
#include "lcu/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lcu/errors.hpp"

namespace lcu {

namespace {

std::vector<double> density_of(const std::vector<cdouble>& amp) {
    std::vector<double> d(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i)
        d[i] = std::norm(amp[i]);
    return d;
}

} // namespace

PiecewiseCdf density_cdf(const std::vector<double>& x, const std::vector<double>& density) {
    if (x.size() != density.size() || x.size() < 2)
        fail(errc::dimension, "density_cdf needs matching arrays of length >= 2");
    PiecewiseCdf c;
    c.x = x;
    c.cdf.resize(x.size());
    c.cdf[0] = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double mass =
            0.5 * (density[i] + density[i + 1]) * (x[i + 1] - x[i]); // trapezoid cell
        if (mass < 0.0)
            fail(errc::degenerate, "negative density cell");
        c.cdf[i + 1] = c.cdf[i] + mass;
    }
    const double total = c.cdf.back();
    if (!(total > 0.0))
        fail(errc::degenerate, "density integrates to zero");
    for (auto& v : c.cdf)
        v /= total;
    c.cdf.back() = 1.0;
    return c;
}

double PiecewiseCdf::inverse(double u) const {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t i = it == cdf.begin() ? 0 : static_cast<std::size_t>(it - cdf.begin()) - 1;
    if (i + 1 >= cdf.size())
        i = cdf.size() - 2;
    const double c0 = cdf[i], c1 = cdf[i + 1];
    if (c1 <= c0)
        return x[i];
    const double t = (u - c0) / (c1 - c0);
    return x[i] + t * (x[i + 1] - x[i]);
}

double PiecewiseCdf::evaluate(double v) const {
    if (v <= x.front())
        return 0.0;
    if (v >= x.back())
        return 1.0;
    const auto it = std::upper_bound(x.begin(), x.end(), v);
    const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    const double t = (v - x[i]) / (x[i + 1] - x[i]);
    return cdf[i] + t * (cdf[i + 1] - cdf[i]);
}

SampleBatch sample_momentum(const SpectralState& state, std::size_t count,
                            std::uint64_t seed) {
    require_normalized(state);
    if (count < 1)
        fail(errc::domain, "sample count must be >= 1");
    const PiecewiseCdf cdf = density_cdf(state.grid.nodes, density_of(state.amp));
    SplitMix64 rng(seed);
    SampleBatch batch;
    batch.seed = seed;
    batch.kind = SampleKind::momentum;
    batch.values.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        batch.values[i] = cdf.inverse(rng.uniform());
    return batch;
}

SampleBatch sample_tau(const SpectralState& state, const TimeGrid& tgrid,
                       std::size_t count, std::uint64_t seed) {
    if (count < 1)
        fail(errc::domain, "sample count must be >= 1");
    const TimeAmplitude ta = time_amplitude(state, tgrid);
    const auto dens = density_of(ta.amp);
    double peak = 0.0;
    for (double d : dens)
        peak = std::max(peak, d);
    if (!(peak > 0.0))
        fail(errc::degenerate, "time density vanishes everywhere");
    if (std::max(dens.front(), dens.back()) > 1e-8 * peak)
        fail(errc::window, "tau window too small for sampling");
    const PiecewiseCdf cdf = density_cdf(tgrid.nodes, dens);
    SplitMix64 rng(seed);
    SampleBatch batch;
    batch.seed = seed;
    batch.kind = SampleKind::tau;
    batch.values.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        batch.values[i] = cdf.inverse(rng.uniform());
    return batch;
}

MomentEstimate estimate_moments(const SampleBatch& batch) {
    const auto& v = batch.values;
    const std::size_t n = v.size();
    if (n < 2)
        fail(errc::domain, "estimate_moments needs at least 2 samples");
    const double dn = static_cast<double>(n);
    double mean = 0.0;
    for (double x : v)
        mean += x;
    mean /= dn;
    double m2 = 0.0, m4 = 0.0;
    for (double x : v) {
        const double d = x - mean;
        const double d2 = d * d;
        m2 += d2;
        m4 += d2 * d2;
    }
    const double s2 = m2 / (dn - 1.0); // unbiased
    m2 /= dn;
    m4 /= dn;
    MomentEstimate e;
    e.count = n;
    e.mean = mean;
    e.variance = s2;
    e.se_mean = std::sqrt(s2 / dn);
    const double var_of_var = (m4 - (dn - 3.0) / (dn - 1.0) * m2 * m2) / dn;
    e.se_variance = std::sqrt(std::max(0.0, var_of_var));
    return e;
}

double ks_statistic(const std::vector<double>& values, const PiecewiseCdf& target) {
    if (values.empty())
        fail(errc::domain, "ks_statistic needs samples");
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = target.evaluate(sorted[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::abs(f - lo), std::abs(hi - f)));
    }
    return d;
}

} // namespace lcu
