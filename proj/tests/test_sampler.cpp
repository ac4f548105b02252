// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "lcu/errors.hpp"
#include "lcu/sampler.hpp"

using namespace lcu;

TEST_SUITE("sampler") {

TEST_CASE("splitmix64 reference stream") {
    SplitMix64 r0(0);
    CHECK(r0.next() == 0xe220a8397b1dcdafull);
    CHECK(r0.next() == 0x6e789e6aa1b965f4ull);
    CHECK(r0.next() == 0x06c45d188009454full);
    SplitMix64 r1(1);
    CHECK(r1.next() == 0x910a2dec89025cc1ull);
    CHECK(r1.next() == 0xbeeb8da1658eec67ull);
    SplitMix64 u1(1);
    CHECK(u1.uniform() == 0.5665615751722809);
    CHECK(u1.uniform() == 0.7457817572627011);
    for (int i = 0; i < 1000; ++i) {
        const double u = u1.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("piecewise cdf from a triangle density") {
    const PiecewiseCdf c = density_cdf({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0});
    REQUIRE(c.cdf.size() == 3);
    CHECK(c.cdf[0] == 0.0);
    CHECK(c.cdf[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c.cdf[2] == 1.0);
    CHECK(c.inverse(0.0) == 0.0);
    CHECK(c.inverse(1.0) == 2.0);
    CHECK(c.inverse(0.25) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(c.evaluate(0.5) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(c.evaluate(-1.0) == 0.0);
    CHECK(c.evaluate(3.0) == 1.0);
    for (double u : {0.05, 0.3, 0.5, 0.77, 0.99}) {
        CHECK(c.evaluate(c.inverse(u)) == doctest::Approx(u).epsilon(1e-13));
    }
}

TEST_CASE("degenerate densities are rejected") {
    CHECK_THROWS_AS(density_cdf({0.0, 1.0}, {0.0, -0.5}), error);
    CHECK_THROWS_AS(density_cdf({0.0, 1.0, 2.0}, {0.0, 0.0, 0.0}), error);
    CHECK_THROWS_AS(density_cdf({0.0}, {1.0}), error);
    try {
        density_cdf({0.0, 1.0, 2.0}, {0.0, 0.0, 0.0});
    } catch (const error& e) {
        CHECK(e.code() == errc::degenerate);
    }
}

TEST_CASE("narrow state samples stay near its peak") {
    const auto g = make_momentum_grid(12.0, 4001);
    const auto s = make_gaussian(5.0, 0.01, g);
    const auto batch = sample_momentum(s, 2000, 3);
    for (double v : batch.values) {
        CHECK(v > 4.9);
        CHECK(v < 5.1);
    }
}

TEST_CASE("momentum sampling is seeded and deterministic") {
    const auto g = make_momentum_grid(12.0, 2001);
    const auto s = make_gaussian(6.0, 0.8, g);
    const auto a = sample_momentum(s, 5000, 42);
    const auto b = sample_momentum(s, 5000, 42);
    const auto c = sample_momentum(s, 5000, 43);
    CHECK(a.values == b.values);
    CHECK(a.values != c.values);
    CHECK(a.seed == 42);
    CHECK(a.kind == SampleKind::momentum);
}

TEST_CASE("momentum sample moments agree with quadrature") {
    const auto g = make_momentum_grid(12.0, 2001);
    const auto s = make_gaussian(6.0, 0.8, g);
    const auto m = momentum_moments(s);
    const auto est = estimate_moments(sample_momentum(s, 200000, 1));
    CHECK(est.count == 200000);
    CHECK(std::abs(est.mean - m.mean) < 4.0 * est.se_mean);
    CHECK(std::abs(est.variance - m.variance) < 4.0 * est.se_variance);
    CHECK(est.se_mean == doctest::Approx(std::sqrt(est.variance / 200000.0)));
}

TEST_CASE("tau sample moments agree with the window density") {
    const auto g = make_momentum_grid(13.5, 2001);
    const auto s = make_gaussian(5.6, 1.0, g);
    const auto tg = make_time_grid(-5.5, 5.5, 1501);
    const auto batch = sample_tau(s, tg, 100000, 2);
    CHECK(batch.kind == SampleKind::tau);
    const auto est = estimate_moments(batch);
    CHECK(std::abs(est.mean) < 4.0 * est.se_mean);
    CHECK(std::abs(est.variance - 0.25) < 4.0 * est.se_variance + 1e-4);
}

TEST_CASE("tau sampling rejects narrow windows") {
    const auto g = make_momentum_grid(13.5, 1001);
    const auto s = make_gaussian(5.6, 1.0, g);
    CHECK_THROWS_AS(sample_tau(s, make_time_grid(-1.0, 1.0, 501), 100, 1), error);
}

TEST_CASE("ks statistic of exact quantiles and of sampled batches") {
    const auto g = make_momentum_grid(12.0, 2001);
    const auto s = make_gaussian(6.0, 0.8, g);
    std::vector<double> dens(s.amp.size());
    for (std::size_t i = 0; i < dens.size(); ++i) dens[i] = std::norm(s.amp[i]);
    const auto cdf = density_cdf(s.grid.nodes, dens);

    const std::size_t n = 4000;
    std::vector<double> quantiles(n);
    for (std::size_t i = 0; i < n; ++i)
        quantiles[i] = cdf.inverse((static_cast<double>(i) + 0.5) / n);
    CHECK(ks_statistic(quantiles, cdf) ==
          doctest::Approx(0.5 / static_cast<double>(n)).epsilon(1e-6));

    const auto batch = sample_momentum(s, 50000, 7);
    CHECK(ks_statistic(batch.values, cdf) < 1.63 / std::sqrt(50000.0));
}

TEST_CASE("estimate_moments closed-form check") {
    SampleBatch b;
    b.values = {1.0, 2.0, 3.0, 4.0};
    const auto est = estimate_moments(b);
    CHECK(est.mean == doctest::Approx(2.5));
    CHECK(est.variance == doctest::Approx(5.0 / 3.0));
    CHECK(est.se_mean == doctest::Approx(std::sqrt(5.0 / 12.0)));
    // var of the variance estimator via central moments m2, m4
    const double m2 = 5.0 / 4.0;
    const double m4 = 2.5625;
    CHECK(est.se_variance ==
          doctest::Approx(std::sqrt((m4 - m2 * m2 / 3.0) / 4.0)).epsilon(1e-12));
    SampleBatch tiny;
    tiny.values = {1.0};
    CHECK_THROWS_AS(estimate_moments(tiny), error);
}

TEST_CASE("sample count must be positive") {
    const auto g = make_momentum_grid(12.0, 1001);
    const auto s = make_gaussian(6.0, 0.8, g);
    CHECK_THROWS_AS(sample_momentum(s, 0, 1), error);
}

}  // TEST_SUITE
