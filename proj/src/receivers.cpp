// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include "linmimo/receivers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace linmimo {

void zf_inverse_diagonal(const CMatrix& gram, std::span<const double> eigenvalues,
                         ReceiverWorkspace& ws) {
    if (!(eigenvalues.front() > 1e-12 * eigenvalues.back())) throw SingularGram();
    ws.a = gram;
    if (!cholesky_lower(ws.a)) throw SingularGram();
    cholesky_inverse_diagonal(ws.a, ws.diag, ws.scratch);
}

void zf_sinrs_from_gram(const CMatrix& gram, std::span<const double> eigenvalues, double rho,
                        ReceiverWorkspace& ws, std::span<double> out) {
    const int m = gram.rows();
    if (rho == 0.0) {
        std::fill(out.begin(), out.begin() + m, 0.0);
        return;
    }
    zf_inverse_diagonal(gram, eigenvalues, ws);
    const double per_stream = rho / m;
    for (int k = 0; k < m; ++k) out[k] = per_stream / ws.diag[k];
}

void mmse_sinrs_from_gram(const CMatrix& gram, double rho, ReceiverWorkspace& ws,
                          std::span<double> out) {
    const int m = gram.rows();
    shifted_identity(gram, rho / m, ws.a);
    if (!cholesky_lower(ws.a)) throw Error("I + (rho/M) H^H H failed to factor");
    cholesky_inverse_diagonal(ws.a, ws.diag, ws.scratch);
    // diag entries lie in (0, 1]; round-off may push 1/d - 1 a hair below zero.
    for (int k = 0; k < m; ++k) out[k] = std::max(1.0 / ws.diag[k] - 1.0, 0.0);
}

double sum_log1p(std::span<const double> gammas) {
    double s = 0.0;
    for (double g : gammas) s += std::log1p(g);
    return s;
}

double min_log1p(std::span<const double> gammas) {
    double lo = std::numeric_limits<double>::infinity();
    for (double g : gammas) lo = std::min(lo, std::log1p(g));
    return lo;
}

double optimal_info_from_eigenvalues(std::span<const double> eigenvalues, double rho) {
    const double scale = rho / static_cast<double>(eigenvalues.size());
    double s = 0.0;
    for (double l : eigenvalues) s += std::log1p(scale * l);
    return s;
}

double mmse_bound_from_eigenvalues(std::span<const double> eigenvalues, double rho) {
    const double m = static_cast<double>(eigenvalues.size());
    double s = 0.0;
    for (double l : eigenvalues) s += 1.0 / (1.0 + rho / m * l);
    return s / m;
}

SinrVector zf_sinrs(const ChannelSample& channel, SnrPoint snr) {
    SinrVector v{std::vector<double>(channel.m_tx()), Receiver::zf};
    ReceiverWorkspace ws(channel.m_tx());
    zf_sinrs_from_gram(channel.gram, channel.eigenvalues, snr.rho, ws, v.gammas);
    return v;
}

SinrVector mmse_sinrs(const ChannelSample& channel, SnrPoint snr) {
    SinrVector v{std::vector<double>(channel.m_tx()), Receiver::mmse};
    ReceiverWorkspace ws(channel.m_tx());
    mmse_sinrs_from_gram(channel.gram, snr.rho, ws, v.gammas);
    return v;
}

MutualInfoNats mutual_info_linear(const SinrVector& sinrs) { return {sum_log1p(sinrs.gammas)}; }

std::vector<double> per_stream_rates(const SinrVector& sinrs) {
    if (sinrs.gammas.empty()) throw InvalidArgument("empty SINR vector");
    std::vector<double> r(sinrs.gammas.size());
    std::transform(sinrs.gammas.begin(), sinrs.gammas.end(), r.begin(),
                   [](double g) { return std::log1p(g); });
    return r;
}

MutualInfoNats mutual_info_optimal(const ChannelSample& channel, SnrPoint snr) {
    return {optimal_info_from_eigenvalues(channel.eigenvalues, snr.rho)};
}

double mmse_bound_statistic(const ChannelSample& channel, SnrPoint snr) {
    return mmse_bound_from_eigenvalues(channel.eigenvalues, snr.rho);
}

double zf_bound_statistic(const ChannelSample& channel, SnrPoint snr) {
    return std::log1p(snr.rho * channel.eigenvalues.front());
}

std::string_view to_string(Receiver r) {
    switch (r) {
        case Receiver::zf: return "zf";
        case Receiver::mmse: return "mmse";
        case Receiver::optimal: return "optimal";
    }
    return "?";
}

Receiver parse_receiver(std::string_view name) {
    if (name == "zf" || name == "ZF") return Receiver::zf;
    if (name == "mmse" || name == "MMSE") return Receiver::mmse;
    if (name == "optimal") return Receiver::optimal;
    throw InvalidArgument("unknown receiver '" + std::string(name) + "'");
}

}  // namespace linmimo
