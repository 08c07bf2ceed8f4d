// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP kernels on the same outage problem.

#include <benchmark/benchmark.h>

#include "linmimo/kernels.hpp"

namespace {

using namespace linmimo;

OutageProblem problem(int m, int n, std::uint64_t trials) {
    OutageProblem p;
    p.dims = SystemDims(m, n);
    for (double db = 0; db <= 30; db += 5) p.rhos.push_back(db_to_linear(db));
    const double rate = bits_to_nats(2.0 * m);
    p.queries = {{{Architecture::coded_across_antennas, Receiver::mmse}, rate},
                 {{Architecture::spatial_multiplexing, Receiver::mmse}, rate},
                 {{Architecture::mmse_upper_bound, Receiver::mmse}, rate},
                 {{Architecture::coded_across_antennas, Receiver::zf}, rate},
                 {{Architecture::optimal, Receiver::optimal}, rate}};
    p.trials = trials;
    p.seed = 1;
    return p;
}

void BM_reference(benchmark::State& state) {
    const OutageProblem p = problem(int(state.range(0)), int(state.range(1)), 2000);
    for (auto _ : state) benchmark::DoNotOptimize(reference::count_outages(p));
    state.SetItemsProcessed(state.iterations() * std::int64_t(p.trials));
}

void BM_kernel(benchmark::State& state) {
    const OutageProblem p = problem(int(state.range(0)), int(state.range(1)), 2000);
    const Execution exec{int(state.range(2))};
    for (auto _ : state) benchmark::DoNotOptimize(kernels::count_outages(p, exec));
    state.SetItemsProcessed(state.iterations() * std::int64_t(p.trials));
}

}  // namespace

BENCHMARK(BM_reference)->Args({2, 2})->Args({4, 4})->Args({8, 16})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel)
    ->ArgsProduct({{2}, {2}, {1, 2, 4}})
    ->ArgsProduct({{4}, {4}, {1, 2, 4}})
    ->ArgsProduct({{8}, {16}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
