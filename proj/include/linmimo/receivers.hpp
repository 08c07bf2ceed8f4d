// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "linmimo/channel.hpp"
#include "linmimo/linalg.hpp"
#include "linmimo/types.hpp"

namespace linmimo {

/// Per-stream SINRs gamma_1..gamma_M of a linear receiver.
struct SinrVector {
    std::vector<double> gammas;
    Receiver receiver = Receiver::mmse;
};

/// Mutual information in nats per channel use.
struct MutualInfoNats {
    double value = 0.0;
    double bits() const { return nats_to_bits(value); }
};

/// gamma_k = (rho/M) / [(H^H H)^{-1}]_kk. Throws SingularGram when
/// lambda_min <= 1e-12 lambda_max. At rho = 0 returns all zeros.
SinrVector zf_sinrs(const ChannelSample& channel, SnrPoint snr);

/// gamma_k = 1 / [(I + (rho/M) H^H H)^{-1}]_kk - 1, from one Cholesky factorization.
SinrVector mmse_sinrs(const ChannelSample& channel, SnrPoint snr);

/// sum_k ln(1 + gamma_k).
MutualInfoNats mutual_info_linear(const SinrVector& sinrs);

/// ln(1 + gamma_k) for each stream.
std::vector<double> per_stream_rates(const SinrVector& sinrs);

/// log det(I + (rho/M) H^H H) = sum_k ln(1 + (rho/M) lambda_k).
MutualInfoNats mutual_info_optimal(const ChannelSample& channel, SnrPoint snr);

/// (1/M) sum_k 1/(1 + (rho/M) lambda_k). The MMSE outage bound event is
/// {statistic >= exp(-R_nats / M)}.
double mmse_bound_statistic(const ChannelSample& channel, SnrPoint snr);

/// ln(1 + rho lambda_1), the min-eigenvalue statistic of the ZF outage bound.
double zf_bound_statistic(const ChannelSample& channel, SnrPoint snr);

//----------------------------------------------------------------------------
// Allocation-free kernels on a precomputed Gram matrix. The ChannelSample
// overloads above are thin wrappers over these, so Monte Carlo kernels and
// direct calls produce identical bits.
//----------------------------------------------------------------------------

struct ReceiverWorkspace {
    explicit ReceiverWorkspace(int m) : a(m, m), scratch(m), diag(m) {}
    CMatrix a;
    std::vector<cplx> scratch;
    std::vector<double> diag;
};

/// Fills ws.diag with diag((H^H H)^{-1}); ZF SINRs are (rho/M) / ws.diag[k].
void zf_inverse_diagonal(const CMatrix& gram, std::span<const double> eigenvalues,
                         ReceiverWorkspace& ws);
void zf_sinrs_from_gram(const CMatrix& gram, std::span<const double> eigenvalues, double rho,
                        ReceiverWorkspace& ws, std::span<double> out);
void mmse_sinrs_from_gram(const CMatrix& gram, double rho, ReceiverWorkspace& ws,
                          std::span<double> out);
double sum_log1p(std::span<const double> gammas);
double min_log1p(std::span<const double> gammas);
double optimal_info_from_eigenvalues(std::span<const double> eigenvalues, double rho);
double mmse_bound_from_eigenvalues(std::span<const double> eigenvalues, double rho);

}  // namespace linmimo
