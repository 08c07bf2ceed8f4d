// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include "linmimo/dmt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace linmimo {

namespace {

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, tol, 50);
}

}  // namespace

std::string_view to_string(DmtKind k) {
    switch (k) {
        case DmtKind::optimal: return "optimal";
        case DmtKind::linear: return "linear";
        case DmtKind::parallel_iid: return "parallel_iid";
    }
    return "?";
}

double DmtCurve::eval(double r) const {
    if (!(r >= 0.0)) throw InvalidArgument("multiplexing gain must be >= 0");
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        const auto [r0, d0] = breakpoints[i - 1];
        const auto [r1, d1] = breakpoints[i];
        if (r <= r1) return d0 + (d1 - d0) * (r - r0) / (r1 - r0);
    }
    return 0.0;
}

DmtCurve dmt_optimal(const SystemDims& dims) {
    DmtCurve c;
    c.kind = DmtKind::optimal;
    const int m = dims.m_tx();
    const int n = dims.n_rx();
    for (int k = 0; k <= m; ++k)
        c.breakpoints.emplace_back(k, static_cast<double>(m - k) * (n - k));
    return c;
}

double dmt_linear(const SystemDims& dims, double r) {
    if (!(r >= 0.0)) throw InvalidArgument("multiplexing gain must be >= 0");
    const double m = dims.m_tx();
    return (dims.n_rx() - m + 1.0) * positive_part(1.0 - r / m);
}

double dmt_parallel_iid(const SystemDims& dims, double r) {
    if (!(r >= 0.0)) throw InvalidArgument("multiplexing gain must be >= 0");
    const double m = dims.m_tx();
    return (dims.n_rx() - m + 1.0) * positive_part(m - r);
}

DmtCurve dmt_curve(DmtKind kind, const SystemDims& dims) {
    if (kind == DmtKind::optimal) return dmt_optimal(dims);
    const double m = dims.m_tx();
    const double d0 = kind == DmtKind::linear ? dmt_linear(dims, 0.0) : dmt_parallel_iid(dims, 0.0);
    return DmtCurve{{{0.0, d0}, {m, 0.0}}, kind};
}

DiversityPrediction finite_rate_prediction(const SystemDims& dims, double rate_bits) {
    if (!(rate_bits > 0.0)) throw InvalidRate();
    const int m_tx = dims.m_tx();
    const int excess = dims.n_rx() - m_tx;
    DiversityPrediction p;
    p.rate_bits = rate_bits;
    p.t_frak = m_tx * std::exp2(-rate_bits / m_tx);
    // Tolerance keeps rates printed to four decimals (t_frak = k + 1e-5) in band k.
    p.m = std::clamp(static_cast<int>(std::ceil(p.t_frak - 1e-12)), 1, m_tx);
    p.d_pred = p.m * (p.m + excess);
    for (int i = 1; i <= m_tx; ++i) p.d_tilde.push_back(i * (i + excess));
    return p;
}

double spherical_cap_probability(int m_dim, double epsilon) {
    if (m_dim < 2) throw InvalidArgument("m_dim must be >= 2");
    if (!(epsilon > 0.0 && epsilon < std::numbers::sqrt2)) throw EpsilonOutOfRange();
    const double e2 = epsilon * epsilon;
    const double phi = std::atan2(epsilon * std::sqrt(1.0 - 0.25 * e2), 1.0 - 0.5 * e2);
    const double md = m_dim;
    const int power = m_dim - 2;
    const double integral = adaptive_simpson(
        [power](double t) { return std::pow(std::sin(t), power); }, 0.0, phi, 1e-14);
    // Omega(phi) / S_M with Omega = (M-1) pi^{(M-1)/2} / Gamma((M+1)/2) * integral and
    // S_M = M pi^{M/2} / Gamma(M/2 + 1).
    const double log_ratio = std::log(md - 1.0) - std::log(md) - 0.5 * std::log(std::numbers::pi) -
                             std::lgamma(0.5 * (md + 1.0)) + std::lgamma(0.5 * md + 1.0);
    return std::exp(log_ratio) * integral;
}

}  // namespace linmimo
