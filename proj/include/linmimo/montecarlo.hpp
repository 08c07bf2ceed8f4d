// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linmimo/channel.hpp"
#include "linmimo/parallel.hpp"
#include "linmimo/stats.hpp"
#include "linmimo/types.hpp"

namespace linmimo {

/// Transmission architecture whose outage event is being measured.
///
///   optimal                 sum_k ln(1 + (rho/M) lambda_k) <= R
///   coded_across_antennas   sum_k ln(1 + gamma_k) <= R
///   spatial_multiplexing    min_k ln(1 + gamma_k) <= R / M
///   mmse_upper_bound        (1/M) sum_k 1/(1 + (rho/M) lambda_k) >= e^{-R/M}
///   zf_upper_bound          ln(1 + (rho/M) lambda_1) <= R / M
///
/// The two bound events contain the coded outage event of their receiver on
/// every realization.
enum class Architecture {
    optimal,
    coded_across_antennas,
    spatial_multiplexing,
    mmse_upper_bound,
    zf_upper_bound,
};

std::string_view to_string(Architecture a);
Architecture parse_architecture(std::string_view name);

struct SchemeSpec {
    Architecture architecture = Architecture::coded_across_antennas;
    Receiver receiver = Receiver::mmse;

    /// Throws InvalidArgument for mismatched architecture/receiver pairs.
    void validate() const;
    std::string label() const;

    friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

/// Outage event of `scheme` on one realization (rate in nats).
bool outage_event(const SchemeSpec& scheme, const ChannelSample& channel, SnrPoint snr,
                  double rate_nats);

/// Channel used by trial `trial` of the stream family `seed`. Realizations
/// with lambda_min <= 1e-12 lambda_max are redrawn from the next substream,
/// so the returned channel is always ZF-invertible.
ChannelSample trial_channel(const SystemDims& dims, std::uint64_t seed, std::uint64_t trial);

OutageEstimate estimate_outage(const SchemeSpec& scheme, const SystemDims& dims, double rho,
                               double rate_bits, std::uint64_t trials, std::uint64_t seed,
                               Execution exec = {});

struct SweepPoint {
    double snr_db = 0.0;
    OutageEstimate estimate;
};

/// One estimate per SNR, all SNRs sharing the same per-trial channels.
std::vector<SweepPoint> sweep_outage(const SchemeSpec& scheme, const SystemDims& dims,
                                     std::span<const double> snr_db, double rate_bits,
                                     std::uint64_t trials, std::uint64_t seed,
                                     Execution exec = {});

/// Several schemes and rates over one set of common random numbers.
/// Result is indexed [query][snr].
struct SweepQuery {
    SchemeSpec scheme;
    double rate_bits = 0.0;
};
std::vector<std::vector<SweepPoint>> sweep_outage_queries(std::span<const SweepQuery> queries,
                                                          const SystemDims& dims,
                                                          std::span<const double> snr_db,
                                                          std::uint64_t trials, std::uint64_t seed,
                                                          Execution exec = {});

struct CurvePoint {
    double snr_db = 0.0;
    double p_hat = 0.0;
    std::uint64_t trials = 0;  ///< 0 when unknown; disables the event floor for this point
};

struct SlopeFit {
    double slope = 0.0;
    std::vector<double> used_db;
    std::vector<double> excluded_db;  ///< zero-probability or below the event floor
};

/// Least-squares slope of -log10(p) against log10(rho) over window_db.
/// Points with p_hat = 0, or with fewer than `min_events` observed events,
/// are excluded and listed in `excluded_db`. Throws InsufficientPoints when
/// fewer than two points remain.
SlopeFit fit_slope(std::span<const CurvePoint> curve, std::pair<double, double> window_db,
                   std::uint64_t min_events = 1);

/// Per-trial mutual information I_N (nats) for trials [0, trials).
std::vector<double> sample_mutual_information(Receiver receiver, const SystemDims& dims,
                                              double rho, std::uint64_t trials,
                                              std::uint64_t seed, Execution exec = {});

MomentEstimate estimate_info_moments(Receiver receiver, const SystemDims& dims, double rho,
                                     std::uint64_t trials, std::uint64_t seed,
                                     Execution exec = {});

struct SinrCovariance {
    double diag_avg = 0.0;
    double offdiag_avg = 0.0;
};

/// Exchangeability-averaged Var(gamma_k) and Cov(gamma_j, gamma_k), j != k.
SinrCovariance estimate_sinr_covariance(Receiver receiver, const SystemDims& dims, double rho,
                                        std::uint64_t trials, std::uint64_t seed,
                                        Execution exec = {});

struct NovikovRow {
    std::string pattern;
    double empirical_re = 0.0;
    double empirical_im = 0.0;
    double predicted = 0.0;
    double z_score = 0.0;  ///< largest |z| over real and imaginary parts
};

/// E[h_i^* h_j h_k^* h_l] for h ~ CN(0, I/N) against 2/N^2, 1/N^2, 1/N^2, 0.
std::vector<NovikovRow> novikov_fourth_moment_check(int n_dim, std::uint64_t trials,
                                                    std::uint64_t seed, Execution exec = {});

struct TraceVarianceEstimate {
    double variance = 0.0;
    double std_error = 0.0;
    int n_dim = 0;
    int m_dim = 0;
};

/// Var(Tr (I + alpha H H^H)^{-1}) with H of size N x round(beta N), entries CN(0, 1/N).
TraceVarianceEstimate estimate_trace_variance(int n_dim, double beta, double alpha,
                                              std::uint64_t trials, std::uint64_t seed,
                                              Execution exec = {});

struct SkewnessPoint {
    int n_rx = 0;
    int m_tx = 0;
    double abs_skewness = 0.0;
    double std_error = 0.0;
};

std::vector<SkewnessPoint> higher_cumulant_decay_check(Receiver receiver, double beta, double rho,
                                                       std::span<const int> n_list,
                                                       std::uint64_t trials, std::uint64_t seed,
                                                       Execution exec = {});

}  // namespace linmimo
