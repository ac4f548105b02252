// SPDX-License-Identifier: Apache-2.0
#ifndef LCU_GRID_HPP
#define LCU_GRID_HPP

#include <complex>
#include <vector>

namespace lcu {

// Uniform grid on [lo, hi] carrying composite-Simpson weights.
// n must be odd and >= 3 so that the node count fits an integer number of
// Simpson panels.
struct UniformGrid {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t n = 0;
    std::vector<double> nodes;
    std::vector<double> weights;

    double spacing() const { return (hi - lo) / static_cast<double>(n - 1); }
};

// Momentum half-line grid [0, k_max].
struct MomentumGrid : UniformGrid {
    double k_max() const { return hi; }
};

// Time-difference grid [tau_min, tau_max].
struct TimeGrid : UniformGrid {
    double tau_min() const { return lo; }
    double tau_max() const { return hi; }
};

MomentumGrid make_momentum_grid(double k_max, std::size_t n);
TimeGrid make_time_grid(double tau_min, double tau_max, std::size_t m);

// Sum of w_i * values_i. Throws a dimension error on length mismatch.
double quadrature(const std::vector<double>& values, const UniformGrid& grid);
std::complex<double> quadrature(const std::vector<std::complex<double>>& values,
                                const UniformGrid& grid);

} // namespace lcu

#endif
