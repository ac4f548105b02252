// SPDX-License-Identifier: Apache-2.0
#ifndef LCU_SAMPLER_HPP
#define LCU_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "lcu/state.hpp"

namespace lcu {

// splitmix64: the full generator state is one 64-bit word and the update is
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Uniform doubles take the top 53 bits: (z >> 11) * 2^-53.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class SampleKind { momentum, tau };

struct SampleBatch {
    std::vector<double> values;
    std::uint64_t seed = 0;
    SampleKind kind = SampleKind::momentum;
};

struct MomentEstimate {
    double mean = 0.0;
    double variance = 0.0; // unbiased, n-1 denominator
    double se_mean = 0.0;
    double se_variance = 0.0;
    std::size_t count = 0;
};

// Piecewise-linear CDF built from trapezoid cell masses of a nodal density;
// shared by the samplers and the KS check.
struct PiecewiseCdf {
    std::vector<double> x;   // node positions
    std::vector<double> cdf; // cdf[0] = 0, cdf[n-1] = 1

    double inverse(double u) const;
    double evaluate(double v) const;
};

PiecewiseCdf density_cdf(const std::vector<double>& x, const std::vector<double>& density);

// Inverse-CDF sampling from |f(k)|^2 on the state's grid.
SampleBatch sample_momentum(const SpectralState& state, std::size_t count,
                            std::uint64_t seed);

// Inverse-CDF sampling from |f(tau)|^2 on tgrid (window checked as in
// time_moments).
SampleBatch sample_tau(const SpectralState& state, const TimeGrid& tgrid,
                       std::size_t count, std::uint64_t seed);

MomentEstimate estimate_moments(const SampleBatch& batch);

// Kolmogorov-Smirnov statistic of a batch against a target CDF.
double ks_statistic(const std::vector<double>& values, const PiecewiseCdf& target);

} // namespace lcu

#endif
