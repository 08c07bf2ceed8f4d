// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include "linmimo/stats.hpp"

#include <algorithm>
#include <cmath>

#include "linmimo/types.hpp"

namespace linmimo {

OutageEstimate wilson_estimate(std::uint64_t events, std::uint64_t trials, double z) {
    if (trials == 0) throw InvalidArgument("zero trials");
    if (events > trials) throw InvalidArgument("events exceed trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(events) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    OutageEstimate e;
    e.p_hat = p;
    e.trials = trials;
    e.events = events;
    // Clamp so that rounding never breaks ci_low <= p_hat <= ci_high.
    e.ci_low = std::clamp(center - half, 0.0, p);
    e.ci_high = std::clamp(center + half, p, 1.0);
    if (events == 0) e.ci_low = 0.0;
    if (events == trials) e.ci_high = 1.0;
    return e;
}

double compensated_sum(std::span<const double> x) {
    double sum = 0.0;
    double c = 0.0;
    for (double v : x) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            c += (sum - t) + v;
        else
            c += (v - t) + sum;
        sum = t;
    }
    return sum + c;
}

MomentEstimate sample_moments(std::span<const double> x) {
    if (x.empty()) throw InvalidArgument("zero trials");
    const double n = static_cast<double>(x.size());
    const double mean = compensated_sum(x) / n;
    std::vector<double> d2(x.size()), d3(x.size()), d4(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - mean;
        d2[i] = d * d;
        d3[i] = d2[i] * d;
        d4[i] = d2[i] * d2[i];
    }
    const double m2 = compensated_sum(d2) / n;
    const double m3 = compensated_sum(d3) / n;
    const double m4 = compensated_sum(d4) / n;

    MomentEstimate r;
    r.trials = x.size();
    r.mean = mean;
    r.variance = x.size() > 1 ? m2 * n / (n - 1.0) : 0.0;
    r.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
    if (x.size() >= 2) {
        r.se_mean = std::sqrt(r.variance / n);
        r.se_variance = std::sqrt(std::max(m4 - m2 * m2, 0.0) / n);
    }
    if (x.size() >= 3) {
        r.se_skewness = std::sqrt(6.0 * n * (n - 1.0) / ((n - 2.0) * (n + 1.0) * (n + 3.0)));
    }
    return r;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw InvalidArgument("empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    return d;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_q(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double gamma_cdf_integer_shape(int shape, double x) {
    if (shape < 1) throw InvalidArgument("gamma shape must be >= 1");
    if (x <= 0.0) return 0.0;
    // P(k, x) = 1 - e^{-x} sum_{j<k} x^j / j!
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j < shape; ++j) {
        term *= x / j;
        sum += term;
    }
    return std::max(0.0, 1.0 - std::exp(-x) * sum);
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw InsufficientPoints("need at least two points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw InsufficientPoints("points share a single abscissa");
    return sxy / sxx;
}

}  // namespace linmimo
