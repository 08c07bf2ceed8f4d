// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "linmimo/linalg.hpp"
#include "linmimo/parallel.hpp"
#include "linmimo/rng.hpp"
#include "linmimo/stats.hpp"
#include "linmimo/types.hpp"

namespace linmimo {

/// One N x M i.i.d. Rayleigh channel realization with its Gram matrix
/// H^H H and the Gram eigenvalues in ascending order.
struct ChannelSample {
    CMatrix entries;
    CMatrix gram;
    std::vector<double> eigenvalues;

    int m_tx() const { return entries.cols(); }
    int n_rx() const { return entries.rows(); }
};

/// Fills `h` (N x M) with i.i.d. CN(0, variance) entries, column by column.
void draw_entries(RngStream& stream, CMatrix& h, double variance = 1.0);

/// Draws H with CN(0,1) entries and populates gram and eigenvalues.
ChannelSample sample_channel(const SystemDims& dims, RngStream& stream);

/// Wraps an explicit channel matrix (N x M, N >= M).
ChannelSample make_channel(CMatrix entries);

/// Recomputes gram and eigenvalues of `sample` from its entries. Eigenvalues
/// below -1e-10 * lambda_max indicate a broken decomposition; the rest of the
/// negative round-off is clamped to zero.
void refresh_channel(ChannelSample& sample, HermitianEigenSolver& solver);

/// Monte Carlo estimate of P(lambda_min(H^H H) <= threshold) over trials
/// [0, trials) of the stream family keyed by `seed`.
OutageEstimate min_eigenvalue_cdf_probe(const SystemDims& dims, std::uint64_t seed,
                                        std::uint64_t trials, double threshold,
                                        Execution exec = {});

}  // namespace linmimo
