// SPDX-License-Identifier: Apache-2.0
#ifndef LCU_EXTREMAL_HPP
#define LCU_EXTREMAL_HPP

#include <utility>
#include <vector>

#include "lcu/state.hpp"

namespace lcu {

// Extremum constants. a and b are realized quadratures of the built state;
// c is the chosen gauge (mean momentum) so the x-map scale satisfies
// scale * c = 2 sqrt(mu) exactly. The realized int k f^2 dk agrees with c
// to quadrature accuracy.
struct ExtremalParams {
    double mu = 0.0;
    double nu = 0.0;
    double a = 0.0;     // int (df/dk)^2 dk
    double b = 0.0;     // int k^2 f^2 dk
    double c = 0.0;     // int k f^2 dk, the chosen mean momentum
    double scale = 0.0; // 2 sqrt(mu) / c
};

struct ExtremalIntegrals {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

struct MinimizeReport {
    double omega_min = 0.0;
    int iterations = 0;
    double grad_norm = 0.0;
    SpectralState state;
};

// f(k) = N * D_nu(scale * (k - c)), normalized. Throws a cutoff error when
// the grid clips the state.
std::pair<SpectralState, ExtremalParams>
build_extremal(double mu, double c, const MomentumGrid& grid);

// The three quadratures of a real-amplitude state. Throws a contract error
// when the imaginary part is not negligible.
ExtremalIntegrals extremal_integrals(const SpectralState& state);

// Max-norm residual of f'' + (nu + 1/2 - x^2/4) f = 0 in the mapped variable
// x = scale * (k - c), finite differences, 2 boundary nodes excluded.
// Requires n >= 201.
double check_euler_lagrange(const SpectralState& state, const ExtremalParams& params);

// Projected gradient descent on the discretized Omega over real amplitudes.
// step is the initial trial step; Barzilai-Borwein scaling with monotone
// backtracking afterwards. 50 consecutive failed line searches raise a
// divergence error. When trace is non-null the accepted objective values
// are appended to it.
MinimizeReport minimize_omega(const SpectralState& init, double step, int max_iter,
                              double grad_tol, std::vector<double>* trace = nullptr);

} // namespace lcu

#endif
