// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "linmimo/asymptotics.hpp"
#include "linmimo/montecarlo.hpp"

using namespace linmimo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Richardson-extrapolated five-point stencils, O(h^6).
template <class F>
double d1(F f, double x, double h) {
    auto s = [&](double k) { return (f(x - 2 * k) - 8 * f(x - k) + 8 * f(x + k) - f(x + 2 * k)) / (12 * k); };
    return (16 * s(h / 2) - s(h)) / 15;
}

template <class F>
double d2(F f, double x, double h) {
    auto s = [&](double k) {
        return (-f(x - 2 * k) + 16 * f(x - k) - 30 * f(x) + 16 * f(x + k) - f(x + 2 * k)) / (12 * k * k);
    };
    return (16 * s(h / 2) - s(h)) / 15;
}

}  // namespace

TEST_CASE("g1 closed form", "[asymptotics]") {
    CHECK(g1_mmse(0.0, 0.5) == 0.0);
    CHECK_THAT(g1_mmse(1.0, 1.0), WithinRel((std::sqrt(5.0) - 1) / 2, 1e-14));
    CHECK_THAT(g1_fixed_point_oracle(1.0, 1.0), WithinRel(0.6180339887498949, 1e-12));
    CHECK_THAT(g1_mmse(1e6, 0.5), WithinRel(5e5, 1e-3));
    CHECK(g1_fixed_point_oracle(0.0, 0.3) == 0.0);

    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> la(-2.0, 3.0);
    std::uniform_real_distribution<double> b(0.02, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double alpha = std::pow(10.0, la(gen));
        const double beta = b(gen);
        const double g = g1_mmse(alpha, beta);
        CHECK(std::abs(g - g1_fixed_point_oracle(alpha, beta)) <= 1e-12 * std::max(1.0, g));
        CHECK(std::abs(g - alpha / (1 + alpha * beta / (1 + g))) <= 1e-10 * (1 + g));
    }
}

TEST_CASE("g-moments match finite differences", "[asymptotics]") {
    for (auto [alpha, beta] : {std::pair{2.0, 0.5}, {0.05, 0.9}, {300.0, 0.2}, {10.0, 1.0}}) {
        const GMoments g = g_moments(alpha, beta);
        auto fa = [beta = beta](double a) { return g1_mmse(a, beta); };
        auto fb = [alpha = alpha](double b) { return g1_mmse(alpha, b); };
        const double h = 1e-2 * alpha;
        const double first = d1(fa, alpha, h);
        CHECK_THAT(g.g2, WithinRel(alpha * alpha * first, 1e-6));
        CHECK_THAT(g.g3, WithinRel(0.5 * alpha * alpha * alpha * (alpha * d2(fa, alpha, 5 * h) + 2 * first), 1e-6));
        if (beta < 1.0) CHECK_THAT(g.dg1_dbeta, WithinRel(d1(fb, beta, 1e-3), 1e-6));
        CHECK(g.g2 >= 0.0);
        CHECK(g.g3 >= 0.0);
    }
    const GMoments big = g_moments(1e6, 0.5);
    CHECK_THAT(big.g2 / 1e12, WithinRel(0.5, 0.01));
}

TEST_CASE("ZF moments at M = 10, N = 20, rho = 1", "[asymptotics]") {
    const AsymptoticMoments z = zf_moments(SystemDims(10, 20), 1.0);
    CHECK_THAT(z.c1, WithinRel(10 * std::log(2.0) + 0.375, 1e-12));
    CHECK_THAT(z.c2, WithinRel(0.5 * 4 * 1.05 / (2.1 * 2.1), 1e-12));
    // Gamma marginal mean (rho/M)(N - M + 1).
    CHECK_THAT(z.mean_sinr, WithinRel(0.1 * 11, 1e-12));
    CHECK_THROWS_AS(zf_moments(SystemDims(4, 4), 10.0), BetaOneUnsupported);
    CHECK_THROWS_AS(sinr_covariance_matrix(Receiver::zf, SystemDims(4, 4), 10.0), BetaOneUnsupported);
}

TEST_CASE("zero SNR gives zero moments", "[asymptotics]") {
    const AsymptoticMoments m = mmse_moments(SystemDims(4, 8), 0.0);
    CHECK(m.c1 == 0.0);
    CHECK(m.c2 == 0.0);
    const SinrCovarianceModel c = sinr_covariance_matrix(Receiver::mmse, SystemDims(4, 8), 0.0);
    CHECK(c.diag == 0.0);
    CHECK(c.offdiag == 0.0);
    CHECK_THROWS_AS(optimal_asymptotics(SystemDims(4, 8), 0.0), InvalidArgument);
}

TEST_CASE("covariance eigenvalues", "[asymptotics]") {
    for (double la = -2; la <= 3; la += 0.5)
        for (int n = 2; n <= 40; n += 3) {
            const double rho = std::pow(10.0, la);
            const SinrCovarianceModel c = sinr_covariance_matrix(Receiver::mmse, SystemDims(2, n), rho);
            INFO("rho = " << rho << " n = " << n);
            CHECK(c.eig_small >= 0.0);
            CHECK_THAT(c.eig_large, WithinRel(c.diag + c.offdiag, 1e-14));
        }
    // ZF at (2, 8): alpha = rho / beta = 40, beta = 1/4.
    const SinrCovarianceModel z = sinr_covariance_matrix(Receiver::zf, SystemDims(2, 8), 10.0);
    const double a2 = 1600.0;
    const double beta = 0.25;
    CHECK_THAT(z.diag, WithinRel(a2 * beta * (1 - beta + 1.0 / 8) / 2, 1e-12));
    CHECK_THAT(z.offdiag, WithinRel(a2 * beta * beta / 4, 1e-12));
}

TEST_CASE("optimal-receiver mean dominates the MMSE mean", "[asymptotics]") {
    for (int m : {2, 5, 10, 20})
        for (int n = m; n <= 4 * m; n += m)
            for (double db : {0.0, 10.0, 20.0, 30.0}) {
                const SystemDims dims(m, n);
                const double rho = db_to_linear(db);
                INFO(m << "x" << n << " at " << db << " dB");
                CHECK(m * optimal_asymptotics(dims, rho).mu >= mmse_moments(dims, rho).c1);
            }
}

// Both means are accurate to o(1) only. At high SNR the MMSE expression sits
// O(1/N) below the ZF one (its variance term keeps the beta - 1/N shift), so
// the ordering is violated on part of this grid even though it holds for the
// exact means, which the next test checks.
TEST_CASE("asymptotic MMSE mean dominates the ZF mean", "[asymptotics][!mayfail]") {
    for (int m : {2, 5, 10, 20})
        for (int n = m + 1; n <= 4 * m; n += m)
            for (double db : {0.0, 10.0, 20.0, 30.0}) {
                const SystemDims dims(m, n);
                const double rho = db_to_linear(db);
                INFO(m << "x" << n << " at " << db << " dB");
                CHECK(mmse_moments(dims, rho).c1 >= zf_moments(dims, rho).c1);
            }
}

TEST_CASE("Monte Carlo MMSE mean dominates the ZF mean", "[asymptotics][mc]") {
    for (auto [m, n] : {std::pair{2, 3}, {2, 5}, {5, 11}, {10, 11}}) {
        const SystemDims dims(m, n);
        const double rho = db_to_linear(20.0);
        const auto mmse = estimate_info_moments(Receiver::mmse, dims, rho, 2000, 1);
        const auto zf = estimate_info_moments(Receiver::zf, dims, rho, 2000, 1);
        // Same channels, and MMSE dominates per realization.
        CHECK(mmse.mean >= zf.mean);
    }
}

TEST_CASE("optimal-receiver variance limits", "[asymptotics]") {
    const double v4 = optimal_asymptotics(SystemDims(8, 8), 1e4).nu2;
    const double v6 = optimal_asymptotics(SystemDims(8, 8), 1e6).nu2;
    // nu2 ~ (1/2) ln rho at beta = 1.
    CHECK_THAT(v6 - v4, WithinRel(0.5 * std::log(100.0), 0.05));
    CHECK_THAT(optimal_asymptotics(SystemDims(8, 16), 1e6).nu2, WithinRel(std::log(2.0), 0.02));
}

TEST_CASE("closed forms", "[asymptotics]") {
    CHECK(gaussian_outage(3.0, 3.0, 2.0) == 0.5);
    CHECK_THAT(gaussian_outage(2.0, 3.0, 1.0), WithinRel(0.15865525393145707, 1e-12));
    CHECK(gaussian_outage(2.0, 3.0, 1e-12) < 1e-100);
    CHECK(gaussian_outage(2.0, 4.0, 1.0) < gaussian_outage(2.0, 3.0, 1.0));
    CHECK_THROWS_AS(gaussian_outage(1.0, 1.0, 0.0), NonpositiveVariance);

    CHECK(trace_variance_closed_form(0.0, 0.5) == 0.0);
    CHECK_THAT(trace_variance_closed_form(1.0, 0.5), WithinRel(0.5 / 18.0625, 1e-14));
    CHECK_THAT(trace_variance_closed_form(1.0, 1.0), WithinRel(0.04, 1e-14));

    const auto [lo, hi] = mp_support(0.25);
    CHECK_THAT(lo, WithinRel(0.25, 1e-14));
    CHECK_THAT(hi, WithinRel(2.25, 1e-14));
    CHECK(mp_support(1.0).first == 0.0);
    CHECK_THAT(mp_support(1e-12).second, WithinAbs(1.0, 1e-5));

    CHECK(high_snr_gaussian_exponent(SystemDims(4, 4), 1e3, 1.0) == 9.0);
    CHECK(high_snr_gaussian_exponent(SystemDims(4, 4), 1e3, 4.0) == 0.0);
    CHECK_THAT(high_snr_gaussian_exponent(SystemDims(2, 4), 100.0, 0.0),
               WithinRel(4 * std::log(100.0) / (2 * std::log(2.0)), 1e-12));
}

TEST_CASE("large-system moments against Monte Carlo", "[asymptotics][mc]") {
    const SystemDims dims(10, 20);
    const double rho = db_to_linear(10.0);
    const MomentEstimate mmse = estimate_info_moments(Receiver::mmse, dims, rho, 20000, 3);
    const AsymptoticMoments am = mmse_moments(dims, rho);
    CHECK_THAT(am.c1, WithinRel(mmse.mean, 0.01));
    CHECK_THAT(am.c2, WithinRel(mmse.variance, 0.10));
    CHECK(am.valid);

    const MomentEstimate opt = estimate_info_moments(Receiver::optimal, dims, rho, 20000, 3);
    const OptimalAsymptotics oa = optimal_asymptotics(dims, rho);
    CHECK_THAT(10 * oa.mu, WithinRel(opt.mean, 0.01));
    CHECK_THAT(oa.nu2, WithinRel(opt.variance, 0.10));
}

TEST_CASE("MMSE c1 per antenna decreases in beta", "[asymptotics]") {
    for (double db : {3.0, 10.0, 30.0}) {
        double prev = INFINITY;
        for (int n = 200; n >= 20; n -= 20) {
            const double c = mmse_moments(SystemDims(20, n), db_to_linear(db)).c1 / 20;
            CHECK(c < prev);
            prev = c;
        }
    }
}
