// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>

#include "lcu/boost.hpp"
#include "lcu/errors.hpp"

using namespace lcu;

TEST_SUITE("boost") {

TEST_CASE("doppler factor and exact beta = 0.6 rescale") {
    const auto t = make_transform(0.6, 0.0, 0.0);
    CHECK(t.doppler == 0.5);  // sqrt(0.4 / 1.6) is exact
    const auto g = make_momentum_grid(12.0, 1001);
    const auto s = make_gaussian(6.0, 0.8, g);
    const auto m = boost_state(s, 0.6);
    CHECK(m.grid.k_max() == 24.0);
    CHECK(m.grid.n == s.grid.n);
    for (std::size_t i = 0; i < s.amp.size(); ++i) {
        CHECK(m.grid.nodes[i] == s.grid.nodes[i] / 0.5);
        CHECK(m.amp[i] == s.amp[i] * std::sqrt(0.5));
    }
    CHECK(std::abs(norm_squared(m) - 1.0) < 1e-13);
}

TEST_CASE("omega and the scaling laws are exact under boosts") {
    const auto g = make_momentum_grid(12.0, 1001);
    for (std::uint64_t seed : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}) {
        const auto s = random_smooth_state(seed, g);
        for (double beta : {-0.8, -0.3, 0.25, 0.6, 0.88}) {
            const auto r = invariance_report(s, beta);
            CHECK(r.dev_product < 1e-12);
            CHECK(r.dev_mean < 1e-12);
            CHECK(r.dev_var_k < 1e-12);
            CHECK(r.dev_var_tau < 1e-12);
            CHECK(r.product_sqrt_m == doctest::Approx(std::sqrt(r.product_m)));
        }
    }
}

TEST_CASE("boosts compose by velocity addition") {
    const auto g = make_momentum_grid(12.0, 801);
    const auto s = random_smooth_state(12, g);
    const double b1 = 0.45, b2 = -0.7;
    const double b12 = (b1 + b2) / (1.0 + b1 * b2);
    const auto two = boost_state(boost_state(s, b1), b2);
    const auto one = boost_state(s, b12);
    CHECK(two.grid.k_max() == doctest::Approx(one.grid.k_max()).epsilon(1e-12));
    for (std::size_t i = 0; i < s.amp.size(); ++i)
        CHECK(std::abs(two.amp[i] - one.amp[i]) < 1e-12);
}

TEST_CASE("boost inverts cleanly") {
    const auto g = make_momentum_grid(12.0, 801);
    const auto s = random_smooth_state(13, g);
    const auto back = boost_state(boost_state(s, 0.6), -0.6);
    CHECK(back.grid.k_max() == doctest::Approx(12.0).epsilon(1e-14));
    for (std::size_t i = 0; i < s.amp.size(); ++i)
        CHECK(std::abs(back.amp[i] - s.amp[i]) < 1e-13);
}

TEST_CASE("translation is a pure phase") {
    const auto g = make_momentum_grid(12.0, 1001);
    const auto s = make_gaussian(5.0, 0.9, g);
    const auto t = translate_state(s, 0.7, 0.1);
    CHECK(std::abs(norm_squared(t) - 1.0) < 1e-13);
    const auto m0 = momentum_moments(s);
    const auto m1 = momentum_moments(t);
    CHECK(m1.mean == doctest::Approx(m0.mean).epsilon(1e-13));
    CHECK(m1.variance == doctest::Approx(m0.variance).epsilon(1e-12));
    for (std::size_t i = 0; i < s.amp.size(); ++i)
        CHECK(std::abs(std::abs(t.amp[i]) - std::abs(s.amp[i])) < 1e-15);
}

TEST_CASE("tau and k densities transform covariantly") {
    const auto g = make_momentum_grid(12.0, 1501);
    const auto s = make_gaussian(5.0, 0.9, g);
    const auto r = covariance_check(s, 0.2, 0.7, 0.1);
    CHECK(r.dev_tau < 1e-6);
    CHECK(r.dev_k < 1e-12);
    // the scale-then-shift ordering disagrees once beta != 0
    CHECK(r.dev_tau_alt > 1e-3);

    const auto r0 = covariance_check(s, 0.0, 0.9, 0.2);
    CHECK(r0.dev_tau < 1e-6);
    CHECK(r0.dev_tau_alt == doctest::Approx(r0.dev_tau).epsilon(1e-9));
}

TEST_CASE("small-beta doppler linearization") {
    const auto g = make_momentum_grid(12.0, 1001);
    const auto s = make_gaussian(5.0, 0.9, g);
    for (double beta : {-0.05, -0.02, 0.01, 0.03, 0.05}) {
        const double dev = doppler_small_beta_check(s, beta);
        CHECK(dev <= beta * beta + 1e-9);
        CHECK(dev >= 0.2 * beta * beta);  // quadratic, not accidentally zero
    }
    CHECK_THROWS_AS(doppler_small_beta_check(s, 0.06), error);
}

TEST_CASE("faster-than-light boosts are rejected") {
    const auto g = make_momentum_grid(12.0, 801);
    const auto s = make_gaussian(6.0, 0.8, g);
    CHECK_THROWS_AS(boost_state(s, 1.0), error);
    CHECK_THROWS_AS(boost_state(s, -1.2), error);
    try {
        boost_state(s, 1.0);
    } catch (const error& e) {
        CHECK(e.code() == errc::domain);
    }
}

}  // TEST_SUITE
