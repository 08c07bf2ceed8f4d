// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

// Monte Carlo kernels. Each kernel exists twice: an OpenMP version that
// shares per-trial work across SNR points and schemes, and a serial
// reference that evaluates every (query, SNR, trial) independently through
// the public receiver API. Both consume identical random streams, so their
// outputs are expected to agree exactly.

#pragma once

#include <cstdint>
#include <vector>

#include "linmimo/linalg.hpp"
#include "linmimo/montecarlo.hpp"
#include "linmimo/parallel.hpp"

namespace linmimo {

struct OutageQuery {
    SchemeSpec scheme;
    double rate_nats = 0.0;
};

struct OutageProblem {
    SystemDims dims{1, 1};
    std::vector<double> rhos;
    std::vector<OutageQuery> queries;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// counts[query][snr]
using OutageCounts = std::vector<std::vector<std::uint64_t>>;

/// Draws the channel for (seed, trial) into `sample`, redrawing from the next
/// substream while lambda_min <= 1e-12 lambda_max.
void draw_trial_channel(const SystemDims& dims, std::uint64_t seed, std::uint64_t trial,
                        ChannelSample& sample, HermitianEigenSolver& solver);

namespace kernels {

OutageCounts count_outages(const OutageProblem& problem, Execution exec);

std::vector<double> mutual_information(Receiver receiver, const SystemDims& dims, double rho,
                                       std::uint64_t trials, std::uint64_t seed, Execution exec);

/// trials x M values, trial-major.
std::vector<double> sinrs(Receiver receiver, const SystemDims& dims, double rho,
                          std::uint64_t trials, std::uint64_t seed, Execution exec);

/// Tr (I_N + alpha H H^H)^{-1}, H of size n x m with CN(0, 1/n) entries.
std::vector<double> resolvent_traces(int n_dim, int m_dim, double alpha, std::uint64_t trials,
                                     std::uint64_t seed, Execution exec);

}  // namespace kernels

namespace reference {

OutageCounts count_outages(const OutageProblem& problem);

std::vector<double> mutual_information(Receiver receiver, const SystemDims& dims, double rho,
                                       std::uint64_t trials, std::uint64_t seed);

std::vector<double> sinrs(Receiver receiver, const SystemDims& dims, double rho,
                          std::uint64_t trials, std::uint64_t seed);

std::vector<double> resolvent_traces(int n_dim, int m_dim, double alpha, std::uint64_t trials,
                                     std::uint64_t seed);

}  // namespace reference

}  // namespace linmimo
