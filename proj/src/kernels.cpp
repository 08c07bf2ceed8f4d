// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include "linmimo/kernels.hpp"

#include <algorithm>
#include <numeric>

#include "detail/events.hpp"
#include "linmimo/receivers.hpp"

namespace linmimo {

namespace {

constexpr std::uint32_t kMaxRedraws = 64;

ChannelSample empty_sample(const SystemDims& dims) {
    ChannelSample s;
    s.entries = CMatrix(dims.n_rx(), dims.m_tx());
    s.gram = CMatrix(dims.m_tx(), dims.m_tx());
    s.eigenvalues.resize(dims.m_tx());
    return s;
}

/// MMSE never needs an invertible Gram matrix, so its sample kernels skip the
/// eigen-decomposition and the redraw rule.
void draw_plain_channel(std::uint64_t seed, std::uint64_t trial, ChannelSample& sample) {
    RngStream stream(seed, trial);
    draw_entries(stream, sample.entries);
    gram(sample.entries, sample.gram);
}

struct SampleWorkspace {
    explicit SampleWorkspace(const SystemDims& dims)
        : sample(empty_sample(dims)), solver(dims.m_tx()), rx(dims.m_tx()) {}
    ChannelSample sample;
    HermitianEigenSolver solver;
    ReceiverWorkspace rx;
};

void trial_sinrs(Receiver receiver, double rho, std::uint64_t seed, std::uint64_t t,
                 SampleWorkspace& ws, std::span<double> out) {
    if (receiver == Receiver::mmse) {
        draw_plain_channel(seed, t, ws.sample);
        mmse_sinrs_from_gram(ws.sample.gram, rho, ws.rx, out);
    } else {
        draw_trial_channel(SystemDims(ws.sample.m_tx(), ws.sample.n_rx()), seed, t, ws.sample,
                           ws.solver);
        zf_sinrs_from_gram(ws.sample.gram, ws.sample.eigenvalues, rho, ws.rx, out);
    }
}

double trial_information(Receiver receiver, double rho, std::uint64_t seed, std::uint64_t t,
                         SampleWorkspace& ws, std::vector<double>& gammas) {
    if (receiver == Receiver::optimal) {
        draw_trial_channel(SystemDims(ws.sample.m_tx(), ws.sample.n_rx()), seed, t, ws.sample,
                           ws.solver);
        return optimal_info_from_eigenvalues(ws.sample.eigenvalues, rho);
    }
    trial_sinrs(receiver, rho, seed, t, ws, gammas);
    return sum_log1p(gammas);
}

double trial_trace(int n_dim, double alpha, std::uint64_t seed, std::uint64_t t, CMatrix& h,
                   CMatrix& g, ReceiverWorkspace& rx) {
    RngStream stream(seed, t);
    draw_entries(stream, h, 1.0 / n_dim);
    gram(h, g);
    shifted_identity(g, alpha, rx.a);
    if (!cholesky_lower(rx.a)) throw Error("I + alpha H^H H failed to factor");
    cholesky_inverse_diagonal(rx.a, rx.diag, rx.scratch);
    // Tr (I_N + a H H^H)^{-1} = (N - M) + Tr (I_M + a H^H H)^{-1}
    double s = static_cast<double>(n_dim - h.cols());
    for (double d : rx.diag) s += d;
    return s;
}

void check_receiver_for_sinrs(Receiver receiver) {
    if (receiver == Receiver::optimal)
        throw InvalidArgument("per-stream SINRs need a linear receiver (zf or mmse)");
}

}  // namespace

void draw_trial_channel(const SystemDims& dims, std::uint64_t seed, std::uint64_t trial,
                        ChannelSample& sample, HermitianEigenSolver& solver) {
    sample.entries.resize(dims.n_rx(), dims.m_tx());
    for (std::uint32_t sub = 0; sub < kMaxRedraws; ++sub) {
        RngStream stream(seed, trial, sub);
        draw_entries(stream, sample.entries);
        refresh_channel(sample, solver);
        if (sample.eigenvalues.front() > 1e-12 * sample.eigenvalues.back()) return;
    }
    throw SingularGram();
}

namespace kernels {

OutageCounts count_outages(const OutageProblem& problem, Execution exec) {
    const SystemDims dims = problem.dims;
    const int m = dims.m_tx();
    const std::size_t n_snr = problem.rhos.size();
    const std::size_t n_q = problem.queries.size();

    bool want_zf = false;
    bool want_mmse = false;
    for (const OutageQuery& q : problem.queries) {
        if (!detail::needs_sinrs(q.scheme.architecture)) continue;
        (q.scheme.receiver == Receiver::zf ? want_zf : want_mmse) = true;
    }

    struct Workspace {
        SampleWorkspace base;
        std::vector<double> zf_diag;
        std::vector<double> gam_zf;
        std::vector<double> gam_mmse;
        OutageCounts counts;
    };

    OutageCounts total(n_q, std::vector<std::uint64_t>(n_snr, 0));
    parallel_trials(
        problem.trials, exec,
        [&] {
            return Workspace{SampleWorkspace(dims), std::vector<double>(m),
                             std::vector<double>(m), std::vector<double>(m),
                             OutageCounts(n_q, std::vector<std::uint64_t>(n_snr, 0))};
        },
        [&](Workspace& ws, std::uint64_t t) {
            ChannelSample& ch = ws.base.sample;
            draw_trial_channel(dims, problem.seed, t, ch, ws.base.solver);
            if (want_zf) {
                zf_inverse_diagonal(ch.gram, ch.eigenvalues, ws.base.rx);
                ws.zf_diag = ws.base.rx.diag;
            }
            for (std::size_t i = 0; i < n_snr; ++i) {
                const double rho = problem.rhos[i];
                if (want_zf) {
                    const double per_stream = rho / m;
                    for (int k = 0; k < m; ++k)
                        ws.gam_zf[k] = rho == 0.0 ? 0.0 : per_stream / ws.zf_diag[k];
                }
                if (want_mmse) mmse_sinrs_from_gram(ch.gram, rho, ws.base.rx, ws.gam_mmse);
                for (std::size_t q = 0; q < n_q; ++q) {
                    const OutageQuery& query = problem.queries[q];
                    const auto& gammas =
                        query.scheme.receiver == Receiver::zf ? ws.gam_zf : ws.gam_mmse;
                    if (detail::scheme_event(query.scheme.architecture, gammas, ch.eigenvalues,
                                             rho, query.rate_nats))
                        ++ws.counts[q][i];
                }
            }
        },
        [&](Workspace& ws) {
            for (std::size_t q = 0; q < n_q; ++q)
                for (std::size_t i = 0; i < n_snr; ++i) total[q][i] += ws.counts[q][i];
        });
    return total;
}

std::vector<double> mutual_information(Receiver receiver, const SystemDims& dims, double rho,
                                       std::uint64_t trials, std::uint64_t seed, Execution exec) {
    std::vector<double> out(trials);
    struct Workspace {
        SampleWorkspace base;
        std::vector<double> gammas;
    };
    parallel_trials(
        trials, exec, [&] { return Workspace{SampleWorkspace(dims), std::vector<double>(dims.m_tx())}; },
        [&](Workspace& ws, std::uint64_t t) {
            out[t] = trial_information(receiver, rho, seed, t, ws.base, ws.gammas);
        },
        [](Workspace&) {});
    return out;
}

std::vector<double> sinrs(Receiver receiver, const SystemDims& dims, double rho,
                          std::uint64_t trials, std::uint64_t seed, Execution exec) {
    check_receiver_for_sinrs(receiver);
    const std::size_t m = dims.m_tx();
    std::vector<double> out(trials * m);
    parallel_trials(
        trials, exec, [&] { return SampleWorkspace(dims); },
        [&](SampleWorkspace& ws, std::uint64_t t) {
            trial_sinrs(receiver, rho, seed, t, ws, std::span<double>(out).subspan(t * m, m));
        },
        [](SampleWorkspace&) {});
    return out;
}

std::vector<double> resolvent_traces(int n_dim, int m_dim, double alpha, std::uint64_t trials,
                                     std::uint64_t seed, Execution exec) {
    std::vector<double> out(trials);
    struct Workspace {
        CMatrix h;
        CMatrix g;
        ReceiverWorkspace rx;
    };
    parallel_trials(
        trials, exec,
        [&] { return Workspace{CMatrix(n_dim, m_dim), CMatrix(m_dim, m_dim), ReceiverWorkspace(m_dim)}; },
        [&](Workspace& ws, std::uint64_t t) {
            out[t] = trial_trace(n_dim, alpha, seed, t, ws.h, ws.g, ws.rx);
        },
        [](Workspace&) {});
    return out;
}

}  // namespace kernels

namespace reference {

OutageCounts count_outages(const OutageProblem& problem) {
    OutageCounts counts(problem.queries.size(),
                        std::vector<std::uint64_t>(problem.rhos.size(), 0));
    for (std::size_t q = 0; q < problem.queries.size(); ++q) {
        const OutageQuery& query = problem.queries[q];
        for (std::size_t i = 0; i < problem.rhos.size(); ++i) {
            for (std::uint64_t t = 0; t < problem.trials; ++t) {
                const ChannelSample ch = trial_channel(problem.dims, problem.seed, t);
                if (outage_event(query.scheme, ch, SnrPoint{problem.rhos[i]}, query.rate_nats))
                    ++counts[q][i];
            }
        }
    }
    return counts;
}

std::vector<double> mutual_information(Receiver receiver, const SystemDims& dims, double rho,
                                       std::uint64_t trials, std::uint64_t seed) {
    SampleWorkspace ws(dims);
    std::vector<double> gammas(dims.m_tx());
    std::vector<double> out(trials);
    for (std::uint64_t t = 0; t < trials; ++t)
        out[t] = trial_information(receiver, rho, seed, t, ws, gammas);
    return out;
}

std::vector<double> sinrs(Receiver receiver, const SystemDims& dims, double rho,
                          std::uint64_t trials, std::uint64_t seed) {
    check_receiver_for_sinrs(receiver);
    const std::size_t m = dims.m_tx();
    SampleWorkspace ws(dims);
    std::vector<double> out(trials * m);
    for (std::uint64_t t = 0; t < trials; ++t)
        trial_sinrs(receiver, rho, seed, t, ws, std::span<double>(out).subspan(t * m, m));
    return out;
}

std::vector<double> resolvent_traces(int n_dim, int m_dim, double alpha, std::uint64_t trials,
                                     std::uint64_t seed) {
    CMatrix h(n_dim, m_dim);
    CMatrix g(m_dim, m_dim);
    ReceiverWorkspace rx(m_dim);
    std::vector<double> out(trials);
    for (std::uint64_t t = 0; t < trials; ++t) out[t] = trial_trace(n_dim, alpha, seed, t, h, g, rx);
    return out;
}

}  // namespace reference

}  // namespace linmimo
