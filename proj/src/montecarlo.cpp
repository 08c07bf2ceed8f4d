// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include "linmimo/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "detail/events.hpp"
#include "linmimo/kernels.hpp"
#include "linmimo/receivers.hpp"

namespace linmimo {

namespace {

void require_trials(std::uint64_t trials, std::uint64_t minimum) {
    if (trials == 0) throw InvalidArgument("zero trials");
    if (trials < minimum)
        throw InvalidArgument("at least " + std::to_string(minimum) + " trials required");
}

void require_increasing(std::span<const double> snr_db) {
    if (snr_db.empty()) throw InvalidArgument("SNR list is empty");
    for (std::size_t i = 1; i < snr_db.size(); ++i)
        if (!(snr_db[i] > snr_db[i - 1]))
            throw InvalidArgument("SNR list must be strictly increasing");
}

}  // namespace

std::string_view to_string(Architecture a) {
    switch (a) {
        case Architecture::optimal: return "optimal";
        case Architecture::coded_across_antennas: return "coded_across_antennas";
        case Architecture::spatial_multiplexing: return "spatial_multiplexing";
        case Architecture::mmse_upper_bound: return "mmse_upper_bound";
        case Architecture::zf_upper_bound: return "zf_upper_bound";
    }
    return "?";
}

Architecture parse_architecture(std::string_view name) {
    for (Architecture a : {Architecture::optimal, Architecture::coded_across_antennas,
                           Architecture::spatial_multiplexing, Architecture::mmse_upper_bound,
                           Architecture::zf_upper_bound})
        if (name == to_string(a)) return a;
    if (name == "coded") return Architecture::coded_across_antennas;
    if (name == "spatial") return Architecture::spatial_multiplexing;
    throw InvalidArgument("unknown architecture '" + std::string(name) + "'");
}

void SchemeSpec::validate() const {
    bool ok = false;
    switch (architecture) {
        case Architecture::optimal: ok = receiver == Receiver::optimal; break;
        case Architecture::coded_across_antennas:
        case Architecture::spatial_multiplexing: ok = receiver != Receiver::optimal; break;
        case Architecture::mmse_upper_bound: ok = receiver == Receiver::mmse; break;
        case Architecture::zf_upper_bound: ok = receiver == Receiver::zf; break;
    }
    if (!ok)
        throw InvalidArgument("architecture " + std::string(to_string(architecture)) +
                              " cannot use receiver " + std::string(to_string(receiver)));
}

std::string SchemeSpec::label() const {
    return std::string(to_string(architecture)) + "/" + std::string(to_string(receiver));
}

bool outage_event(const SchemeSpec& scheme, const ChannelSample& channel, SnrPoint snr,
                  double rate_nats) {
    scheme.validate();
    std::vector<double> gammas;
    if (detail::needs_sinrs(scheme.architecture))
        gammas = scheme.receiver == Receiver::zf ? zf_sinrs(channel, snr).gammas
                                                 : mmse_sinrs(channel, snr).gammas;
    return detail::scheme_event(scheme.architecture, gammas, channel.eigenvalues, snr.rho,
                                rate_nats);
}

ChannelSample trial_channel(const SystemDims& dims, std::uint64_t seed, std::uint64_t trial) {
    ChannelSample s;
    HermitianEigenSolver solver(dims.m_tx());
    draw_trial_channel(dims, seed, trial, s, solver);
    return s;
}

std::vector<std::vector<SweepPoint>> sweep_outage_queries(std::span<const SweepQuery> queries,
                                                          const SystemDims& dims,
                                                          std::span<const double> snr_db,
                                                          std::uint64_t trials, std::uint64_t seed,
                                                          Execution exec) {
    require_increasing(snr_db);
    require_trials(trials, 1);
    if (queries.empty()) throw InvalidArgument("no schemes to evaluate");
    OutageProblem problem{dims, {}, {}, trials, seed};
    for (const SweepQuery& q : queries) {
        q.scheme.validate();
        if (!(q.rate_bits > 0.0)) throw InvalidRate();
        problem.queries.push_back({q.scheme, bits_to_nats(q.rate_bits)});
    }
    for (double db : snr_db) problem.rhos.push_back(SnrPoint::db(db).rho);

    const OutageCounts counts = kernels::count_outages(problem, exec);
    std::vector<std::vector<SweepPoint>> out(queries.size());
    for (std::size_t q = 0; q < queries.size(); ++q)
        for (std::size_t i = 0; i < snr_db.size(); ++i)
            out[q].push_back({snr_db[i], wilson_estimate(counts[q][i], trials)});
    return out;
}

std::vector<SweepPoint> sweep_outage(const SchemeSpec& scheme, const SystemDims& dims,
                                     std::span<const double> snr_db, double rate_bits,
                                     std::uint64_t trials, std::uint64_t seed, Execution exec) {
    const std::array<SweepQuery, 1> q{SweepQuery{scheme, rate_bits}};
    return std::move(sweep_outage_queries(q, dims, snr_db, trials, seed, exec).front());
}

OutageEstimate estimate_outage(const SchemeSpec& scheme, const SystemDims& dims, double rho,
                               double rate_bits, std::uint64_t trials, std::uint64_t seed,
                               Execution exec) {
    scheme.validate();
    if (!(rate_bits > 0.0)) throw InvalidRate();
    require_trials(trials, 1);
    const SnrPoint snr = SnrPoint::linear(rho);
    OutageProblem problem{dims, {snr.rho}, {{scheme, bits_to_nats(rate_bits)}}, trials, seed};
    return wilson_estimate(kernels::count_outages(problem, exec)[0][0], trials);
}

SlopeFit fit_slope(std::span<const CurvePoint> curve, std::pair<double, double> window_db,
                   std::uint64_t min_events) {
    if (!(window_db.first < window_db.second)) throw InvalidArgument("slope window must satisfy lo < hi");
    SlopeFit fit;
    std::vector<double> x;
    std::vector<double> y;
    for (const CurvePoint& p : curve) {
        if (p.snr_db < window_db.first || p.snr_db > window_db.second) continue;
        const bool floor_hit =
            p.trials > 0 &&
            std::llround(p.p_hat * static_cast<double>(p.trials)) < static_cast<long long>(min_events);
        if (!(p.p_hat > 0.0) || floor_hit) {
            fit.excluded_db.push_back(p.snr_db);
            continue;
        }
        fit.used_db.push_back(p.snr_db);
        x.push_back(p.snr_db / 10.0);
        y.push_back(-std::log10(p.p_hat));
    }
    if (x.size() < 2)
        throw InsufficientPoints("slope fit needs at least two positive points in [" +
                                 std::to_string(window_db.first) + ", " +
                                 std::to_string(window_db.second) + "] dB");
    fit.slope = least_squares_slope(x, y);
    return fit;
}

std::vector<double> sample_mutual_information(Receiver receiver, const SystemDims& dims,
                                              double rho, std::uint64_t trials,
                                              std::uint64_t seed, Execution exec) {
    require_trials(trials, 1);
    SnrPoint::linear(rho);
    return kernels::mutual_information(receiver, dims, rho, trials, seed, exec);
}

MomentEstimate estimate_info_moments(Receiver receiver, const SystemDims& dims, double rho,
                                     std::uint64_t trials, std::uint64_t seed, Execution exec) {
    require_trials(trials, 100);
    return sample_moments(sample_mutual_information(receiver, dims, rho, trials, seed, exec));
}

SinrCovariance estimate_sinr_covariance(Receiver receiver, const SystemDims& dims, double rho,
                                        std::uint64_t trials, std::uint64_t seed, Execution exec) {
    const int m = dims.m_tx();
    if (m < 2) throw InvalidArgument("SINR covariance needs M >= 2");
    require_trials(trials, 2);
    SnrPoint::linear(rho);
    const std::vector<double> g = kernels::sinrs(receiver, dims, rho, trials, seed, exec);

    std::vector<double> column(trials);
    std::vector<double> mean(m);
    for (int k = 0; k < m; ++k) {
        for (std::uint64_t t = 0; t < trials; ++t) column[t] = g[t * m + k];
        mean[k] = compensated_sum(column) / static_cast<double>(trials);
    }
    std::vector<double> sq(trials);
    std::vector<double> cross(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        double s = 0.0;
        double s2 = 0.0;
        for (int k = 0; k < m; ++k) {
            const double d = g[t * m + k] - mean[k];
            s += d;
            s2 += d * d;
        }
        sq[t] = s2;
        cross[t] = s * s - s2;
    }
    const double dof = static_cast<double>(trials - 1);
    return {compensated_sum(sq) / (dof * m), compensated_sum(cross) / (dof * m * (m - 1))};
}

std::vector<NovikovRow> novikov_fourth_moment_check(int n_dim, std::uint64_t trials,
                                                    std::uint64_t seed, Execution exec) {
    if (n_dim < 4) throw InvalidArgument("the all-distinct pattern needs n_dim >= 4");
    require_trials(trials, 10000);
    // Per trial: each pattern averaged over disjoint index groups of one vector.
    constexpr int kCols = 5;
    std::vector<double> v(trials * kCols);
    struct Workspace {
        std::vector<cplx> h;
    };
    parallel_trials(
        trials, exec, [&] { return Workspace{std::vector<cplx>(n_dim)}; },
        [&](Workspace& ws, std::uint64_t t) {
            RngStream stream(seed, t);
            for (cplx& x : ws.h) x = stream.next_complex_gaussian(1.0 / n_dim);
            const auto& h = ws.h;
            double p1 = 0.0;
            for (const cplx& x : h) p1 += std::norm(x) * std::norm(x);
            p1 /= n_dim;
            double p2 = 0.0;
            const int pairs = n_dim / 2;
            for (int g = 0; g < pairs; ++g) p2 += std::norm(h[2 * g]) * std::norm(h[2 * g + 1]);
            p2 /= pairs;
            double p3 = 0.0;
            const int shifted = (n_dim - 1) / 2;
            for (int g = 0; g < shifted; ++g)
                p3 += std::norm(h[2 * g + 1]) * std::norm(h[2 * g + 2]);
            p3 /= shifted;
            cplx p4 = 0.0;
            const int quads = n_dim / 4;
            for (int g = 0; g < quads; ++g)
                p4 += std::conj(h[4 * g]) * h[4 * g + 1] * std::conj(h[4 * g + 2]) * h[4 * g + 3];
            p4 /= static_cast<double>(quads);
            double* row = v.data() + t * kCols;
            row[0] = p1;
            row[1] = p2;
            row[2] = p3;
            row[3] = p4.real();
            row[4] = p4.imag();
        },
        [](Workspace&) {});

    std::array<MomentEstimate, kCols> mom;
    std::vector<double> column(trials);
    for (int c = 0; c < kCols; ++c) {
        for (std::uint64_t t = 0; t < trials; ++t) column[t] = v[t * kCols + c];
        mom[c] = sample_moments(column);
    }
    const double n2 = static_cast<double>(n_dim) * n_dim;
    auto z = [](const MomentEstimate& e, double target) {
        return e.se_mean > 0.0 ? std::abs(e.mean - target) / e.se_mean : 0.0;
    };
    return {
        {"i=j=k=l", mom[0].mean, 0.0, 2.0 / n2, z(mom[0], 2.0 / n2)},
        {"i=j!=k=l", mom[1].mean, 0.0, 1.0 / n2, z(mom[1], 1.0 / n2)},
        {"i=l!=k=j", mom[2].mean, 0.0, 1.0 / n2, z(mom[2], 1.0 / n2)},
        {"all distinct", mom[3].mean, mom[4].mean, 0.0, std::max(z(mom[3], 0.0), z(mom[4], 0.0))},
    };
}

TraceVarianceEstimate estimate_trace_variance(int n_dim, double beta, double alpha,
                                              std::uint64_t trials, std::uint64_t seed,
                                              Execution exec) {
    if (!(beta > 0.0 && beta <= 1.0)) throw InvalidArgument("beta must lie in (0, 1]");
    if (!(alpha >= 0.0)) throw InvalidArgument("alpha must be >= 0");
    if (n_dim < 1) throw InvalidArgument("n_dim must be >= 1");
    require_trials(trials, 2);
    const int m_dim = std::clamp(static_cast<int>(std::lround(beta * n_dim)), 1, n_dim);
    const std::vector<double> tr =
        kernels::resolvent_traces(n_dim, m_dim, alpha, trials, seed, exec);
    const MomentEstimate e = sample_moments(tr);
    return {e.variance, e.se_variance, n_dim, m_dim};
}

std::vector<SkewnessPoint> higher_cumulant_decay_check(Receiver receiver, double beta, double rho,
                                                       std::span<const int> n_list,
                                                       std::uint64_t trials, std::uint64_t seed,
                                                       Execution exec) {
    if (n_list.size() < 2) throw InvalidArgument("cumulant decay needs at least two sizes");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (!(n_list[i] > n_list[i - 1])) throw InvalidArgument("sizes must be ascending");
    if (!(beta > 0.0 && beta <= 1.0)) throw InvalidArgument("beta must lie in (0, 1]");
    std::vector<SkewnessPoint> out;
    for (int n : n_list) {
        const int m = std::clamp(static_cast<int>(std::lround(beta * n)), 1, n);
        const MomentEstimate e =
            estimate_info_moments(receiver, SystemDims(m, n), rho, trials, seed, exec);
        out.push_back({n, m, std::abs(e.skewness), e.se_skewness});
    }
    return out;
}

}  // namespace linmimo
