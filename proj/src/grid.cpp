// SPDX-License-Identifier: Apache-2.0
#include "lcu/grid.hpp"

#include <string>

#include "lcu/errors.hpp"

namespace lcu {

namespace {

void fill_simpson(UniformGrid& g, double lo, double hi, std::size_t n) {
    if (n < 3 || n % 2 == 0)
        fail(errc::resolution, "grid size must be odd and >= 3, got " + std::to_string(n));
    if (!(hi > lo))
        fail(errc::domain, "grid upper bound must exceed lower bound");
    g.lo = lo;
    g.hi = hi;
    g.n = n;
    g.nodes.resize(n);
    g.weights.resize(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        g.nodes[i] = lo + h * static_cast<double>(i);
    g.nodes.front() = lo;
    g.nodes.back() = hi;
    const double w1 = h / 3.0;
    for (std::size_t i = 0; i < n; ++i)
        g.weights[i] = (i == 0 || i == n - 1) ? w1 : (i % 2 == 1 ? 4.0 * w1 : 2.0 * w1);
}

} // namespace

MomentumGrid make_momentum_grid(double k_max, std::size_t n) {
    if (!(k_max > 0.0))
        fail(errc::domain, "k_max must be positive");
    MomentumGrid g;
    fill_simpson(g, 0.0, k_max, n);
    return g;
}

TimeGrid make_time_grid(double tau_min, double tau_max, std::size_t m) {
    TimeGrid g;
    fill_simpson(g, tau_min, tau_max, m);
    return g;
}

double quadrature(const std::vector<double>& values, const UniformGrid& grid) {
    if (values.size() != grid.n)
        fail(errc::dimension, "quadrature: " + std::to_string(values.size()) +
                                  " values on a grid of " + std::to_string(grid.n));
    double s = 0.0;
    for (std::size_t i = 0; i < grid.n; ++i)
        s += grid.weights[i] * values[i];
    return s;
}

std::complex<double> quadrature(const std::vector<std::complex<double>>& values,
                                const UniformGrid& grid) {
    if (values.size() != grid.n)
        fail(errc::dimension, "quadrature: " + std::to_string(values.size()) +
                                  " values on a grid of " + std::to_string(grid.n));
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < grid.n; ++i)
        s += grid.weights[i] * values[i];
    return s;
}

} // namespace lcu
