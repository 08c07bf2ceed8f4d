// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/distributions/normal.hpp>

#include <cmath>
#include <random>
#include <set>

#include "linmimo/rng.hpp"
#include "linmimo/stats.hpp"
#include "linmimo/types.hpp"

using namespace linmimo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("philox known-answer vectors", "[rng]") {
    using C = Philox4x32::Counter;
    using K = Philox4x32::Key;
    CHECK(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}) ==
          C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::block(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::block(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are pure functions of (seed, trial, substream)", "[rng]") {
    RngStream a(7, 123, 0);
    RngStream b(7, 123, 0);
    for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());

    std::set<std::uint64_t> firsts;
    for (std::uint64_t t = 0; t < 64; ++t)
        for (std::uint32_t s = 0; s < 4; ++s) firsts.insert(RngStream(7, t, s).next_u64());
    firsts.insert(RngStream(8, 0, 0).next_u64());
    CHECK(firsts.size() == 64 * 4 + 1);
}

TEST_CASE("uniforms lie in (0, 1] and gaussians have unit moments", "[rng]") {
    RngStream s(1, 0);
    const int n = 400000;
    double sum = 0.0;
    double sum2 = 0.0;
    double sum4 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = s.next_uniform();
        REQUIRE(u > 0.0);
        REQUIRE(u <= 1.0);
    }
    for (int i = 0; i < n; ++i) {
        const double g = s.next_gaussian();
        sum += g;
        sum2 += g * g;
        sum4 += g * g * g * g;
    }
    CHECK(std::abs(sum / n) < 4.0 / std::sqrt(n));
    CHECK(std::abs(sum2 / n - 1.0) < 4.0 * std::sqrt(2.0 / n));
    CHECK(std::abs(sum4 / n - 3.0) < 4.0 * std::sqrt(96.0 / n));

    double power = 0.0;
    std::complex<double> mean{};
    std::complex<double> pseudo{};
    for (int i = 0; i < n; ++i) {
        const auto z = s.next_complex_gaussian();
        power += std::norm(z);
        mean += z;
        pseudo += z * z;
    }
    CHECK(std::abs(power / n - 1.0) < 4.0 / std::sqrt(n));
    CHECK(std::abs(mean / double(n)) < 4.0 / std::sqrt(n));
    // Circular symmetry: E z^2 = 0.
    CHECK(std::abs(pseudo / double(n)) < 4.0 / std::sqrt(n));
}

TEST_CASE("wilson interval", "[stats]") {
    const OutageEstimate e = wilson_estimate(30, 1000);
    CHECK(e.p_hat == 0.03);
    CHECK(e.ci_low < 0.03);
    CHECK(e.ci_high > 0.03);

    const OutageEstimate zero = wilson_estimate(0, 1000);
    CHECK(zero.p_hat == 0.0);
    CHECK(zero.ci_low == 0.0);
    const double z2 = kZ95 * kZ95;
    CHECK_THAT(zero.ci_high, WithinRel(z2 / (1000 + z2), 1e-12));

    const OutageEstimate all = wilson_estimate(1000, 1000);
    CHECK(all.ci_high == 1.0);
    CHECK_THROWS_AS(wilson_estimate(5, 0), InvalidArgument);
    CHECK_THROWS_AS(wilson_estimate(5, 4), InvalidArgument);
}

TEST_CASE("wilson 95% interval covers 93-97% of synthetic Bernoulli streams", "[stats]") {
    std::mt19937_64 gen(2026);
    for (double p : {0.01, 0.1, 0.5}) {
        std::bernoulli_distribution coin(p);
        int covered = 0;
        for (int rep = 0; rep < 1000; ++rep) {
            std::uint64_t events = 0;
            for (int i = 0; i < 1000; ++i) events += coin(gen);
            const OutageEstimate e = wilson_estimate(events, 1000);
            covered += e.ci_low <= p && p <= e.ci_high;
        }
        INFO("p = " << p);
        CHECK(covered >= 930);
        CHECK(covered <= 970);
    }
}

TEST_CASE("normal tail and integer-shape gamma cdf match boost", "[stats]") {
    const boost::math::normal_distribution<double> nd;
    for (double x : {-6.0, -1.3, 0.0, 0.7, 3.0, 8.0}) {
        CHECK_THAT(normal_cdf(x), WithinRel(boost::math::cdf(nd, x), 1e-12));
        CHECK_THAT(normal_q(x), WithinRel(boost::math::cdf(boost::math::complement(nd, x)), 1e-12));
    }
    for (int k : {1, 2, 7, 20})
        for (double x : {0.01, 0.5, 3.0, 7.0, 25.0})
            CHECK_THAT(gamma_cdf_integer_shape(k, x), WithinAbs(boost::math::gamma_p(k, x), 1e-13));
    CHECK(gamma_cdf_integer_shape(3, 0.0) == 0.0);
}

TEST_CASE("ks distance, moments, sums and slopes", "[stats]") {
    std::vector<double> u;
    for (int i = 1; i <= 100; ++i) u.push_back((i - 0.5) / 100.0);
    CHECK_THAT(ks_distance(u, [](double x) { return x; }), WithinAbs(0.005, 1e-12));
    CHECK_THAT(ks_distance(u, [](double x) { return x * x; }), WithinAbs(0.25, 0.01));

    const std::vector<double> d{1, 2, 3, 4, 10};
    const MomentEstimate m = sample_moments(d);
    CHECK_THAT(m.mean, WithinRel(4.0, 1e-15));
    CHECK_THAT(m.variance, WithinRel(12.5, 1e-14));  // unbiased
    CHECK(m.skewness > 0.0);
    CHECK(m.trials == 5);

    std::vector<double> tiny(1000, 1e-16);
    tiny.insert(tiny.begin(), 1.0);
    // Plain summation loses every 1e-16 term against 1.0.
    CHECK_THAT(compensated_sum(tiny), WithinAbs(1.0 + 1e-13, 1e-15));

    const std::vector<double> x{0, 1, 2, 3};
    const std::vector<double> y{1, 3.5, 6, 8.5};
    CHECK_THAT(least_squares_slope(x, y), WithinRel(2.5, 1e-14));
}
