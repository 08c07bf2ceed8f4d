// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include "linmimo/asymptotics.hpp"

#include <cmath>

#include "linmimo/stats.hpp"

namespace linmimo {

namespace {

void check_alpha_beta(double alpha, double beta) {
    if (!(alpha >= 0.0)) throw InvalidArgument("alpha must be >= 0");
    if (!(beta > 0.0 && beta <= 1.0)) throw InvalidArgument("beta must lie in (0, 1]");
}

// beta - k/N reaches 0 for M = k; the g-formulas stay finite there.
double shifted_beta(const SystemDims& dims, int k) {
    return dims.beta() - static_cast<double>(k) / dims.n_rx();
}

double g1_unchecked(double alpha, double beta) {
    const double u1 = alpha * (1.0 - beta) - 1.0;
    const double s = std::sqrt(u1 * u1 + 4.0 * alpha);
    // Rationalized branch avoids cancellation when u1 < 0.
    return u1 >= 0.0 ? 0.5 * (u1 + s) : 2.0 * alpha / (s - u1);
}

GMoments g_unchecked(double alpha, double beta) {
    GMoments g;
    g.alpha = alpha;
    g.beta_eff = beta;
    g.g1 = g1_unchecked(alpha, beta);
    const double b = 1.0 - beta;
    const double u1 = alpha * b - 1.0;
    const double s = std::sqrt(u1 * u1 + 4.0 * alpha);
    const double w = u1 * b + 2.0;  // d(s^2)/dalpha / 2
    const double d1 = 0.5 * (b + w / s);
    const double d2 = 0.5 * (b * b / s - w * w / (s * s * s));
    g.g2 = alpha * alpha * d1;
    g.g3 = 0.5 * alpha * alpha * alpha * (alpha * d2 + 2.0 * d1);
    g.dg1_dbeta = -0.5 * alpha * (1.0 + u1 / s);
    return g;
}

}  // namespace

double g1_mmse(double alpha, double beta) {
    check_alpha_beta(alpha, beta);
    return g1_unchecked(alpha, beta);
}

double g1_fixed_point_oracle(double alpha, double beta, double tol) {
    check_alpha_beta(alpha, beta);
    double g = alpha;
    for (int it = 0; it < 100000; ++it) {
        const double next = alpha / (1.0 + alpha * beta / (1.0 + g));
        if (std::abs(next - g) <= tol * (1.0 + std::abs(next))) return next;
        g = next;
    }
    throw NonConvergence("fixed-point iteration for g1 did not converge");
}

GMoments g_moments(double alpha, double beta) {
    check_alpha_beta(alpha, beta);
    return g_unchecked(alpha, beta);
}

AsymptoticMoments mmse_moments(const SystemDims& dims, double rho) {
    SnrPoint::linear(rho);
    const double m = dims.m_tx();
    const double beta = dims.beta();
    const double alpha = rho / beta;
    const GMoments g0 = g_unchecked(alpha, beta);
    const GMoments g1s = g_unchecked(alpha, shifted_beta(dims, 1));

    AsymptoticMoments out;
    out.receiver = Receiver::mmse;
    out.mean_sinr = g1s.g1;
    out.v_d = beta * g1s.g2;
    if (dims.m_tx() >= 2) {
        const double b2 = shifted_beta(dims, 2);
        const GMoments g2s = g_unchecked(alpha, b2);
        const double one = 1.0 + g2s.g1;
        const double den = 1.0 + 2.0 * alpha * (1.0 + b2) + alpha * alpha * (1.0 - b2) * (1.0 - b2);
        out.v_od = beta * beta *
                   (3.0 * g2s.g2 * g2s.g2 / (one * one) - 2.0 * g2s.g3 / one +
                    b2 * std::pow(alpha, 4) / (den * den));
    }
    const double one0 = 1.0 + g0.g1;
    out.c1 = m * std::log1p(g0.g1) - beta * g0.dg1_dbeta / one0 - out.v_d / (2.0 * one0 * one0);
    const double one1 = 1.0 + g1s.g1;
    out.c2 = (out.v_d + out.v_od) / (one1 * one1);
    // Heuristic: the log-linearization needs SINR fluctuations small against 1 + E[gamma].
    out.valid = std::sqrt(out.v_d / m) / one1 <= 0.5;
    return out;
}

AsymptoticMoments zf_moments(const SystemDims& dims, double rho) {
    SnrPoint::linear(rho);
    if (dims.m_tx() == dims.n_rx()) throw BetaOneUnsupported();
    const double m = dims.m_tx();
    const double n = dims.n_rx();
    const double beta = dims.beta();
    const double alpha = rho / beta;
    const double b = 1.0 - beta;
    const double ab = 1.0 + alpha * b;

    AsymptoticMoments out;
    out.receiver = Receiver::zf;
    out.c1 = m * std::log1p(alpha * b) + alpha * beta * (1.0 + 0.5 * alpha * b) / (ab * ab);
    const double ab_n = 1.0 + alpha * (b + 1.0 / n);
    out.c2 = beta * alpha * alpha * (1.0 + 1.0 / n) / (ab_n * ab_n);
    out.v_d = alpha * alpha * beta * (b + 1.0 / n);
    out.v_od = alpha * alpha * beta * beta;
    out.mean_sinr = alpha * (b + 1.0 / n);
    return out;
}

SinrCovarianceModel sinr_covariance_matrix(Receiver receiver, const SystemDims& dims,
                                           double rho) {
    AsymptoticMoments mom;
    switch (receiver) {
        case Receiver::mmse: mom = mmse_moments(dims, rho); break;
        case Receiver::zf: mom = zf_moments(dims, rho); break;
        case Receiver::optimal:
            throw InvalidArgument("SINR covariance is defined for linear receivers only");
    }
    const double m = dims.m_tx();
    SinrCovarianceModel c;
    c.diag = mom.v_d / m;
    c.offdiag = mom.v_od / (m * m);
    c.eig_large = c.diag + (m - 1.0) * c.offdiag;
    c.eig_small = c.diag - c.offdiag;
    return c;
}

OptimalAsymptotics optimal_asymptotics(const SystemDims& dims, double rho) {
    if (!(rho > 0.0)) throw InvalidArgument("rho must be > 0");
    const double beta = dims.beta();
    const double alpha = rho / beta;
    const double g = g1_unchecked(alpha, beta);
    OptimalAsymptotics out;
    out.mu = std::log1p(g) + std::log(1.0 - alpha * (1.0 - beta) + g) / beta +
             g / (alpha * beta) - 1.0 / beta;
    const double t = 1.0 - g / alpha;
    out.nu2 = -std::log1p(-t * t / beta);
    return out;
}

double gaussian_outage(double rate_nats, double c1, double c2) {
    if (!(c2 > 0.0)) throw NonpositiveVariance();
    return normal_q((c1 - rate_nats) / std::sqrt(c2));
}

double trace_variance_closed_form(double alpha, double beta) {
    check_alpha_beta(alpha, beta);
    const double den = 1.0 + 2.0 * alpha * (1.0 + beta) + alpha * alpha * (1.0 - beta) * (1.0 - beta);
    return alpha * alpha * beta / (den * den);
}

std::pair<double, double> mp_support(double beta) {
    check_alpha_beta(0.0, beta);
    const double r = std::sqrt(beta);
    return {(1.0 - r) * (1.0 - r), (1.0 + r) * (1.0 + r)};
}

double high_snr_gaussian_exponent(const SystemDims& dims, double rho, double r_mult) {
    if (!(r_mult >= 0.0)) throw InvalidArgument("multiplexing gain must be >= 0");
    const double gap = dims.m_tx() - r_mult;
    const double gap2 = gap > 0.0 ? gap * gap : 0.0;
    if (dims.m_tx() == dims.n_rx()) return gap2;
    if (!(rho > 0.0)) throw InvalidArgument("rho must be > 0");
    return gap2 * std::log(rho) / (2.0 * std::abs(std::log1p(-dims.beta())));
}

}  // namespace linmimo
