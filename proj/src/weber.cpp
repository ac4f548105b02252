// SPDX-License-Identifier: Apache-2.0
#include "lcu/weber.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lcu/errors.hpp"

namespace lcu {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

LnGamma ln_gamma_positive(double x) {
    // valid for x >= 0.5
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        acc += kLanczos[i] / (x - 1.0 + static_cast<double>(i));
    const double t = x + kLanczosG - 0.5;
    LnGamma r;
    r.value = 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(t) - t + std::log(acc);
    r.sign = 1;
    return r;
}

// Recessive large-x expansion: D_nu(x) ~ e^{-x^2/4} x^nu sum_s t_s with
// t_0 = 1, t_{s+1} = -t_s (2s - nu)(2s + 1 - nu) / (2 (s+1) x^2).
double pcf_d_asymptotic(double nu, double x) {
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    double prev = std::abs(term);
    for (int s = 0; s < 200; ++s) {
        const double m = 2.0 * static_cast<double>(s);
        term *= -(m - nu) * (m + 1.0 - nu) * inv2x2 / (static_cast<double>(s) + 1.0);
        const double mag = std::abs(term);
        if (mag > prev)
            break; // divergent tail reached, stop at the smallest term
        sum += term;
        prev = mag;
        if (mag < 1e-17 * std::abs(sum))
            break;
    }
    return std::exp(-0.25 * x * x + nu * std::log(x)) * sum;
}

// Exact non-negative integer order: D_n(x) = He_n(x) e^{-x^2/4} with the
// probabilists' Hermite recurrence.
double pcf_d_hermite(int n, double x) {
    double h0 = 1.0;
    if (n == 0)
        return std::exp(-0.25 * x * x);
    double h1 = x;
    for (int m = 1; m < n; ++m) {
        const double h2 = x * h1 - static_cast<double>(m) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1 * std::exp(-0.25 * x * x);
}

} // namespace

LnGamma ln_gamma(double x) {
    if (is_nonpositive_integer(x))
        fail(errc::domain, "ln_gamma pole at x = " + std::to_string(x));
    if (x >= 0.5)
        return ln_gamma_positive(x);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    const double s = std::sin(kPi * x);
    const LnGamma g1 = ln_gamma_positive(1.0 - x);
    LnGamma r;
    r.value = std::log(kPi / std::abs(s)) - g1.value;
    r.sign = s > 0.0 ? 1 : -1;
    return r;
}

double recip_gamma(double x) {
    if (is_nonpositive_integer(x))
        return 0.0;
    const LnGamma g = ln_gamma(x);
    return static_cast<double>(g.sign) * std::exp(-g.value);
}

double kummer_m(double a, double b, double z) {
    if (is_nonpositive_integer(b))
        fail(errc::domain, "kummer_m requires b away from non-positive integers");
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < 10000; ++j) {
        term *= (a + static_cast<double>(j)) / (b + static_cast<double>(j)) * z /
                (static_cast<double>(j) + 1.0);
        sum += term;
        if (std::abs(term) <= 1e-16 * std::abs(sum))
            return sum;
    }
    fail(errc::precision, "kummer_m did not converge within 1e4 terms");
}

double pcf_d(double nu, double x) {
    if (nu >= 0.0 && nu == std::floor(nu) && nu <= 64.0)
        return pcf_d_hermite(static_cast<int>(nu), x);
    if (x >= 6.5)
        return pcf_d_asymptotic(nu, x);
    // Kummer even/odd decomposition,
    //   D_nu(x) = 2^{nu/2} e^{-z/2} [ sqrt(pi)/Gamma((1-nu)/2) M(-nu/2, 1/2, z)
    //             - sqrt(2 pi) x / Gamma(-nu/2) M((1-nu)/2, 3/2, z) ],  z = x^2/2.
    const double z = 0.5 * x * x;
    const double t1 =
        std::sqrt(kPi) * recip_gamma(0.5 * (1.0 - nu)) * kummer_m(-0.5 * nu, 0.5, z);
    const double t2 =
        std::sqrt(2.0 * kPi) * x * recip_gamma(-0.5 * nu) * kummer_m(0.5 * (1.0 - nu), 1.5, z);
    return std::exp2(0.5 * nu) * std::exp(-0.5 * z) * (t1 - t2);
}

double pcf_d_prime(double nu, double x) { return 0.5 * x * pcf_d(nu, x) - pcf_d(nu + 1.0, x); }

double pcf_d_integral(double nu, double x) {
    if (!(nu < 0.0))
        fail(errc::domain,
             "pcf_d_integral diverges for nu >= 0 (xi^{-nu-1} not integrable at 0)");
    // int_0^40 e^{-x xi - xi^2/2} xi^{-nu-1} dxi, graded near 0 by xi = e^u.
    auto integrand_u = [&](double u) {
        const double xi = std::exp(u);
        return std::exp(-x * xi - 0.5 * xi * xi - nu * u);
    };
    auto integrand_xi = [&](double xi) {
        return std::exp(-x * xi - 0.5 * xi * xi - (nu + 1.0) * std::log(xi));
    };
    auto simpson = [](auto&& fn, double lo, double hi, std::size_t m) {
        const double h = (hi - lo) / static_cast<double>(m - 1);
        double s = fn(lo) + fn(hi);
        for (std::size_t i = 1; i + 1 < m; ++i)
            s += fn(lo + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
        return s * h / 3.0;
    };
    const double u_min = -(46.0 + std::max(0.0, -x)) / (-nu);
    const double part1 = simpson(integrand_u, u_min, 0.0, 48001);
    const double part2 = simpson(integrand_xi, 1.0, 40.0, 64001);
    const LnGamma g = ln_gamma(-nu);
    return static_cast<double>(g.sign) * std::exp(-0.25 * x * x - g.value) * (part1 + part2);
}

RootResult solve_mu(double bracket_lo, double bracket_hi, double tol) {
    if (!(bracket_lo > 0.0) || !(bracket_hi > bracket_lo))
        fail(errc::domain, "solve_mu needs 0 < bracket_lo < bracket_hi");
    auto g = [](double mu) { return pcf_d_prime(mu - 0.5, -2.0 * std::sqrt(mu)); };
    double lo = bracket_lo, hi = bracket_hi;
    double glo = g(lo), ghi = g(hi);
    int evals = 2;
    if (glo == 0.0)
        std::swap(lo, hi), std::swap(glo, ghi);
    if (ghi == 0.0) {
        RootResult r;
        r.mu = hi;
        r.mu_squared = hi * hi;
        r.nu = hi - 0.5;
        r.residual = 0.0;
        r.iterations = evals;
        return r;
    }
    if (glo * ghi > 0.0)
        fail(errc::bracket, "no sign change of D'_{mu-1/2}(-2 sqrt(mu)) on [" +
                                std::to_string(bracket_lo) + ", " +
                                std::to_string(bracket_hi) + "]");
    double best = std::abs(glo) < std::abs(ghi) ? lo : hi;
    double gbest = std::abs(glo) < std::abs(ghi) ? glo : ghi;
    for (int it = 0; it < 200; ++it) {
        if (hi - lo < 1e-12 && std::abs(gbest) < tol)
            break;
        // alternate secant proposals with plain bisection so the bracket
        // width is guaranteed to shrink even when secant stalls on one side
        double cand = 0.5 * (lo + hi);
        if (it % 2 == 1) {
            const double sec = lo - glo * (hi - lo) / (ghi - glo);
            const double margin = 1e-3 * (hi - lo);
            if (sec > lo + margin && sec < hi - margin)
                cand = sec;
        }
        const double gc = g(cand);
        ++evals;
        if (std::abs(gc) < std::abs(gbest)) {
            best = cand;
            gbest = gc;
        }
        if (gc == 0.0) {
            lo = hi = cand;
            glo = ghi = 0.0;
            break;
        }
        if (glo * gc < 0.0) {
            hi = cand;
            ghi = gc;
        } else {
            lo = cand;
            glo = gc;
        }
    }
    if (hi - lo >= 1e-12 || std::abs(gbest) >= tol)
        fail(errc::precision, "solve_mu failed to reach tolerance");
    RootResult r;
    r.mu = best;
    r.mu_squared = best * best;
    r.nu = best - 0.5;
    r.residual = gbest;
    r.iterations = evals;
    return r;
}

} // namespace lcu
