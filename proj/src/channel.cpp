// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include "linmimo/channel.hpp"

#include <algorithm>
#include <cmath>

namespace linmimo {

void draw_entries(RngStream& stream, CMatrix& h, double variance) {
    for (int j = 0; j < h.cols(); ++j)
        for (cplx& v : h.col(j)) v = stream.next_complex_gaussian(variance);
}

void refresh_channel(ChannelSample& sample, HermitianEigenSolver& solver) {
    gram(sample.entries, sample.gram);
    const int m = sample.entries.cols();
    sample.eigenvalues.resize(m);
    solver.eigenvalues(sample.gram, sample.eigenvalues);
    const double top = sample.eigenvalues.back();
    for (double& l : sample.eigenvalues) {
        if (l < -1e-10 * std::abs(top))
            throw Error("Hermitian eigensolver returned a negative Gram eigenvalue");
        l = std::max(l, 0.0);
    }
}

ChannelSample sample_channel(const SystemDims& dims, RngStream& stream) {
    ChannelSample s;
    s.entries = CMatrix(dims.n_rx(), dims.m_tx());
    draw_entries(stream, s.entries);
    HermitianEigenSolver solver(dims.m_tx());
    refresh_channel(s, solver);
    return s;
}

ChannelSample make_channel(CMatrix entries) {
    if (entries.cols() < 1 || entries.rows() < entries.cols())
        throw InvalidArgument("channel matrix must be N x M with N >= M >= 1");
    ChannelSample s;
    s.entries = std::move(entries);
    HermitianEigenSolver solver(s.entries.cols());
    refresh_channel(s, solver);
    return s;
}

OutageEstimate min_eigenvalue_cdf_probe(const SystemDims& dims, std::uint64_t seed,
                                        std::uint64_t trials, double threshold, Execution exec) {
    if (trials == 0) throw InvalidArgument("zero trials");
    if (!(threshold > 0.0)) throw InvalidArgument("threshold must be positive");
    struct Workspace {
        ChannelSample sample;
        HermitianEigenSolver solver;
        std::uint64_t events = 0;
    };
    std::uint64_t events = 0;
    parallel_trials(
        trials, exec,
        [&] {
            Workspace ws{ChannelSample{}, HermitianEigenSolver(dims.m_tx())};
            ws.sample.entries = CMatrix(dims.n_rx(), dims.m_tx());
            return ws;
        },
        [&](Workspace& ws, std::uint64_t t) {
            RngStream stream(seed, t);
            draw_entries(stream, ws.sample.entries);
            refresh_channel(ws.sample, ws.solver);
            if (ws.sample.eigenvalues.front() <= threshold) ++ws.events;
        },
        [&](Workspace& ws) { events += ws.events; });
    return wilson_estimate(events, trials);
}

}  // namespace linmimo
