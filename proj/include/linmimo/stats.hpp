// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace linmimo {

/// Monte Carlo probability estimate with a 95% Wilson score interval.
struct OutageEstimate {
    double p_hat = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t events = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for `events` successes out of `trials`.
OutageEstimate wilson_estimate(std::uint64_t events, std::uint64_t trials, double z = kZ95);

/// Sample mean, variance and skewness with standard errors.
struct MomentEstimate {
    double mean = 0.0;
    double variance = 0.0;
    double skewness = 0.0;
    double se_mean = 0.0;
    double se_variance = 0.0;
    double se_skewness = 0.0;
    std::uint64_t trials = 0;
};

/// Deterministic (index-order) moment reduction. Requires at least one sample.
MomentEstimate sample_moments(std::span<const double> x);

/// Compensated (Neumaier) sum in index order.
double compensated_sum(std::span<const double> x);

/// sup_x |F_n(x) - cdf(x)| for the empirical CDF of `samples`.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Standard normal CDF and upper tail Q(x) = 1 - Phi(x).
double normal_cdf(double x);
double normal_q(double x);

/// CDF of Gamma(shape, 1) for integer shape >= 1.
double gamma_cdf_integer_shape(int shape, double x);

/// Least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace linmimo
