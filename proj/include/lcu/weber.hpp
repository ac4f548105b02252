// SPDX-License-Identifier: Apache-2.0
#ifndef LCU_WEBER_HPP
#define LCU_WEBER_HPP

#include <cstdint>

namespace lcu {

struct LnGamma {
    double value = 0.0; // log |Gamma(x)|
    int sign = 1;       // sign of Gamma(x)
};

struct RootResult {
    double mu = 0.0;
    double mu_squared = 0.0;
    double nu = 0.0; // mu - 1/2
    double residual = 0.0;
    int iterations = 0;
};

// log |Gamma(x)| with sign, Lanczos g=7. Poles (x a non-positive integer)
// raise a domain error. Absolute error below 1e-12 on [0.1, 30].
LnGamma ln_gamma(double x);

// 1 / Gamma(x); exactly 0 at the poles.
double recip_gamma(double x);

// Kummer confluent hypergeometric M(a, b, z) by direct series, summed until
// the term drops below 1e-16 of the partial sum. Throws a precision error
// after 1e4 terms.
double kummer_m(double a, double b, double z);

// Weber parabolic cylinder function D_nu(x). Kummer even/odd decomposition
// for |x| < 6.5, recessive asymptotic series for x >= 6.5, Hermite recurrence
// for exact non-negative integer nu. Intended range |nu| <= 5, |x| <= 20.
double pcf_d(double nu, double x);

// dD_nu/dx = (x/2) D_nu(x) - D_{nu+1}(x).
double pcf_d_prime(double nu, double x);

// Integral representation
//   D_nu(x) = e^{-x^2/4} / Gamma(-nu) * int_0^inf e^{-x xi - xi^2/2} xi^{-nu-1} dxi,
// valid only for nu < 0 (domain error otherwise). Quadrature oracle for pcf_d.
double pcf_d_integral(double nu, double x);

// Solve D'_{mu - 1/2}(-2 sqrt(mu)) = 0 by bisection with secant acceleration.
// Requires a sign change on [bracket_lo, bracket_hi]; refines until
// |g| < tol and the bracket width is below 1e-12.
RootResult solve_mu(double bracket_lo, double bracket_hi, double tol);

// Default bracket around the first root (near 0.295).
inline constexpr double kMuBracketLo = 0.25;
inline constexpr double kMuBracketHi = 0.35;

} // namespace lcu

#endif
