// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "linmimo/types.hpp"

namespace linmimo {

/// Large-system MMSE SINR moments at (alpha, beta_eff).
struct GMoments {
    double g1 = 0.0;
    double g2 = 0.0;        ///< alpha^2 dg1/dalpha
    double g3 = 0.0;        ///< (alpha^3/2)(alpha d2g1/dalpha2 + 2 dg1/dalpha)
    double dg1_dbeta = 0.0;
    double alpha = 0.0;
    double beta_eff = 0.0;
};

/// Mean and variance (nats) of the mutual information of a linear receiver,
/// plus the SINR covariance scales: Var(gamma_k) ~ v_d/M, Cov ~ v_od/M^2.
struct AsymptoticMoments {
    double c1 = 0.0;
    double c2 = 0.0;
    double v_d = 0.0;
    double v_od = 0.0;
    double mean_sinr = 0.0;
    Receiver receiver = Receiver::mmse;
    /// False where the Gaussian approximation is known to break down.
    bool valid = true;
};

struct OptimalAsymptotics {
    double mu = 0.0;   ///< nats per transmit antenna
    double nu2 = 0.0;  ///< variance of the log-det, nats^2
};

struct SinrCovarianceModel {
    double diag = 0.0;
    double offdiag = 0.0;
    double eig_large = 0.0;  ///< diag + (M-1) offdiag, along the all-ones vector
    double eig_small = 0.0;  ///< diag - offdiag, multiplicity M-1
};

/// g1 = (1/2)[alpha(1-beta) - 1 + sqrt((alpha(1-beta) - 1)^2 + 4 alpha)].
double g1_mmse(double alpha, double beta);

/// Iterates g <- alpha / (1 + alpha beta / (1 + g)) from g = alpha.
/// Throws NonConvergence after 1e5 iterations.
double g1_fixed_point_oracle(double alpha, double beta, double tol = 1e-14);

GMoments g_moments(double alpha, double beta);

/// Uses beta - 1/N for the mean and v_d and beta - 2/N inside v_od.
AsymptoticMoments mmse_moments(const SystemDims& dims, double rho);

/// Throws BetaOneUnsupported when M = N.
AsymptoticMoments zf_moments(const SystemDims& dims, double rho);

/// Throws BetaOneUnsupported for ZF with M = N.
SinrCovarianceModel sinr_covariance_matrix(Receiver receiver, const SystemDims& dims,
                                           double rho);

OptimalAsymptotics optimal_asymptotics(const SystemDims& dims, double rho);

/// P(I <= R) ~ Q((c1 - R)/sqrt(c2)). Throws NonpositiveVariance for c2 <= 0.
double gaussian_outage(double rate_nats, double c1, double c2);

/// Var Tr (I + alpha H H^H)^{-1} in the large-system limit.
double trace_variance_closed_form(double alpha, double beta);

/// Marcenko-Pastur support ((1 - sqrt(beta))^2, (1 + sqrt(beta))^2).
std::pair<double, double> mp_support(double beta);

/// High-SNR Gaussian-approximation outage exponent at multiplexing gain r:
/// (M - r)^2 ln(rho) / (2 |ln(1 - beta)|) for beta < 1 and (M - r)^2 for beta = 1.
double high_snr_gaussian_exponent(const SystemDims& dims, double rho, double r_mult);

}  // namespace linmimo
