// SPDX-License-Identifier: Apache-2.0
#ifndef LCU_STATE_HPP
#define LCU_STATE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "lcu/grid.hpp"

namespace lcu {

using cdouble = std::complex<double>;

// Relative amplitude allowed at k_max before the cutoff warning triggers.
inline constexpr double kBoundaryWarnRatio = 1e-6;

// Complex spectral amplitude f(k) on a momentum grid.
struct SpectralState {
    MomentumGrid grid;
    std::vector<cdouble> amp;
};

// Complex time-domain amplitude f(tau) on a time grid.
struct TimeAmplitude {
    TimeGrid grid;
    std::vector<cdouble> amp;
};

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
    double second_moment = 0.0;
};

double norm_squared(const SpectralState& state);
double norm_squared(const TimeAmplitude& ta);

// |f(k_max)| / max|f|; > kBoundaryWarnRatio means the cutoff clips the state.
double boundary_ratio(const SpectralState& state);
bool cutoff_warning(const SpectralState& state);

// Rescale to unit norm. Throws a degenerate-state error on zero amplitude.
SpectralState normalize(const SpectralState& state);

// Throws a contract error unless the norm is within 1e-6 of 1.
void require_normalized(const SpectralState& state);

// mean = int k |f|^2 dk, second = int k^2 |f|^2 dk, variance = second - mean^2.
Moments momentum_moments(const SpectralState& state);

// f(tau_j) = (1/sqrt(2 pi)) int f(k) exp(-i k tau_j) dk.
TimeAmplitude time_amplitude(const SpectralState& state, const TimeGrid& tgrid);
std::vector<cdouble> time_amplitude_at(const SpectralState& state,
                                       const std::vector<double>& taus);

// Moments of |f(tau)|^2. Throws a window error when the boundary density
// exceeds 1e-8 of the peak density.
Moments time_moments(const TimeAmplitude& ta);

// int |df/dk|^2 dk with centered differences (one-sided 2nd-order ends).
// Requires n >= 5.
double time_variance_spectral(const SpectralState& state);

// Omega = (int |df/dk|^2 dk) * (<k^2> - <k>^2).
double omega(const SpectralState& state);

// Normalized truncated Gaussian exp(-(k - kbar)^2 / (4 sigma^2)), real.
SpectralState make_gaussian(double kbar, double sigma, const MomentumGrid& grid);

// Deterministic random smooth real bump superposition for property tests.
// Bumps are kept away from k_max so the cutoff warning stays quiet.
SpectralState random_smooth_state(std::uint64_t seed, const MomentumGrid& grid);

// Linear-interpolation resample onto another grid (no renormalization).
SpectralState resample(const SpectralState& state, const MomentumGrid& grid);

} // namespace lcu

#endif
