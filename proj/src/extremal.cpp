// SPDX-License-Identifier: Apache-2.0
#include "lcu/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lcu/errors.hpp"
#include "lcu/weber.hpp"

namespace lcu {

namespace {

void require_real(const SpectralState& state) {
    for (const auto& a : state.amp)
        if (std::abs(a.imag()) > 1e-10)
            fail(errc::contract, "operation requires a real amplitude");
}

std::vector<double> real_part(const SpectralState& state) {
    std::vector<double> f(state.amp.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = state.amp[i].real();
    return f;
}

} // namespace

std::pair<SpectralState, ExtremalParams> build_extremal(double mu, double c,
                                                        const MomentumGrid& grid) {
    if (!(mu > 0.0))
        fail(errc::domain, "build_extremal requires mu > 0");
    if (!(c > 0.0))
        fail(errc::domain, "build_extremal requires c > 0");
    const double nu = mu - 0.5;
    const double scale = 2.0 * std::sqrt(mu) / c;
    SpectralState s;
    s.grid = grid;
    s.amp.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i)
        s.amp[i] = pcf_d(nu, scale * (grid.nodes[i] - c));
    s = normalize(s);
    if (cutoff_warning(s))
        fail(errc::cutoff, "grid cuts the extremal state: |f(k_max)|/max|f| = " +
                               std::to_string(boundary_ratio(s)));
    const ExtremalIntegrals q = extremal_integrals(s);
    ExtremalParams p;
    p.mu = mu;
    p.nu = nu;
    p.a = q.a;
    p.b = q.b;
    p.c = c; // chosen gauge; q.c agrees to quadrature accuracy
    p.scale = scale;
    return {std::move(s), p};
}

ExtremalIntegrals extremal_integrals(const SpectralState& state) {
    require_normalized(state);
    require_real(state);
    ExtremalIntegrals q;
    q.a = time_variance_spectral(state);
    std::vector<double> v(state.grid.n);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = state.grid.nodes[i] * std::norm(state.amp[i]);
    q.c = quadrature(v, state.grid);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] *= state.grid.nodes[i];
    q.b = quadrature(v, state.grid);
    return q;
}

double check_euler_lagrange(const SpectralState& state, const ExtremalParams& params) {
    if (state.grid.n < 201)
        fail(errc::resolution, "check_euler_lagrange needs n >= 201");
    require_real(state);
    const auto f = real_part(state);
    const double hx = params.scale * state.grid.spacing();
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < state.grid.n; ++i) {
        const double x = params.scale * (state.grid.nodes[i] - params.c);
        const double second = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (hx * hx);
        const double res = second + (params.nu + 0.5 - 0.25 * x * x) * f[i];
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

namespace {

struct P1Objective {
    const std::vector<double>& w;
    const std::vector<double>& k;
    double h;

    // two-point (P1) Dirichlet energy; immune to the checkerboard null mode
    // of the centered-difference quadratic form
    double dirichlet(const std::vector<double>& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            const double d = f[i + 1] - f[i];
            s += d * d;
        }
        return s / h;
    }

    void moments(const std::vector<double>& f, double& b, double& c) const {
        b = 0.0;
        c = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double d = w[i] * f[i] * f[i];
            c += k[i] * d;
            b += k[i] * k[i] * d;
        }
    }

    double value(const std::vector<double>& f) const {
        double b, c;
        moments(f, b, c);
        return dirichlet(f) * (b - c * c);
    }

    void gradient(const std::vector<double>& f, std::vector<double>& g) const {
        const std::size_t n = f.size();
        const double a = dirichlet(f);
        double b, c;
        moments(f, b, c);
        const double vk = b - c * c;
        g.resize(n);
        g[0] = vk * (2.0 / h) * (f[0] - f[1]);
        for (std::size_t i = 1; i + 1 < n; ++i)
            g[i] = vk * (2.0 / h) * (2.0 * f[i] - f[i - 1] - f[i + 1]);
        g[n - 1] = vk * (2.0 / h) * (f[n - 1] - f[n - 2]);
        for (std::size_t i = 0; i < n; ++i)
            g[i] += a * (2.0 * w[i] * k[i] * k[i] * f[i] - 4.0 * c * w[i] * k[i] * f[i]);
        // project onto the tangent of the unit sphere of the w-metric
        double gf = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            gf += w[i] * g[i] * f[i];
        for (std::size_t i = 0; i < n; ++i)
            g[i] -= gf * f[i];
    }

    void normalize(std::vector<double>& f) const {
        double n2 = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i)
            n2 += w[i] * f[i] * f[i];
        const double s = 1.0 / std::sqrt(n2);
        for (auto& v : f)
            v *= s;
    }

    double wdot(const std::vector<double>& u, const std::vector<double>& v) const {
        double s = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i)
            s += w[i] * u[i] * v[i];
        return s;
    }
};

} // namespace

MinimizeReport minimize_omega(const SpectralState& init, double step, int max_iter,
                              double grad_tol, std::vector<double>* trace) {
    require_normalized(init);
    require_real(init);
    if (init.grid.n < 5)
        fail(errc::resolution, "minimize_omega needs n >= 5");
    if (!(step > 0.0))
        fail(errc::domain, "initial step must be positive");

    const P1Objective obj{init.grid.weights, init.grid.nodes, init.grid.spacing()};
    std::vector<double> f = real_part(init);
    obj.normalize(f);

    std::vector<double> g, g_prev, f_prev, df, dg, trial;
    double value = obj.value(f);
    obj.gradient(f, g);
    double gnorm = std::sqrt(obj.wdot(g, g));
    if (trace)
        trace->push_back(value);

    int it = 0;
    int fail_streak = 0;
    double alpha = step;
    bool have_prev = false;
    for (; it < max_iter && gnorm >= grad_tol; ++it) {
        if (have_prev) {
            // Barzilai-Borwein step from the last accepted move
            df.resize(f.size());
            dg.resize(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) {
                df[i] = f[i] - f_prev[i];
                dg[i] = g[i] - g_prev[i];
            }
            const double sy = obj.wdot(df, dg);
            if (sy > 0.0)
                alpha = obj.wdot(df, df) / sy;
        }
        double a = alpha;
        bool accepted = false;
        trial.resize(f.size());
        for (int bt = 0; bt < 60; ++bt) {
            for (std::size_t i = 0; i < f.size(); ++i)
                trial[i] = f[i] - a * g[i];
            obj.normalize(trial);
            const double v = obj.value(trial);
            if (v < value) {
                f_prev = f;
                g_prev = g;
                f = trial;
                value = v;
                accepted = true;
                break;
            }
            a *= 0.5;
        }
        if (!accepted) {
            if (++fail_streak >= 50)
                fail(errc::divergence,
                     "minimize_omega: no descent direction in 50 consecutive line searches");
            continue;
        }
        fail_streak = 0;
        have_prev = true;
        obj.gradient(f, g);
        gnorm = std::sqrt(obj.wdot(g, g));
        if (trace)
            trace->push_back(value);
    }

    MinimizeReport rep;
    rep.state.grid = init.grid;
    rep.state.amp.assign(f.begin(), f.end());
    rep.state = normalize(rep.state);
    rep.omega_min = omega(rep.state);
    rep.iterations = it;
    rep.grad_norm = gnorm;
    return rep;
}

} // namespace lcu
