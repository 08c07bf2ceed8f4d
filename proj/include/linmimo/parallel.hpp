// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <omp.h>

#include <cstdint>
#include <exception>
#include <mutex>

namespace linmimo {

/// Worker count for Monte Carlo kernels. Affects wall time only: every
/// kernel partitions work by trial index and reduces order-independently.
struct Execution {
    int workers = 0;  ///< 0 selects the OpenMP default.

    int resolved() const { return workers > 0 ? workers : omp_get_max_threads(); }
};

/// Runs body(workspace, trial) for every trial in [0, trials) across
/// `exec.resolved()` OpenMP threads. Each thread builds one workspace with
/// make_workspace() and folds it into the caller's state with
/// merge(workspace) under a lock. The first exception thrown by any worker is
/// rethrown on the calling thread.
template <class MakeWorkspace, class Body, class Merge>
void parallel_trials(std::uint64_t trials, Execution exec, MakeWorkspace make_workspace, Body body,
                     Merge merge) {
    std::exception_ptr failure;
    std::mutex lock;
    const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel num_threads(exec.resolved())
    {
        auto ws = make_workspace();
        bool ok = true;
#pragma omp for schedule(static)
        for (std::int64_t t = 0; t < n; ++t) {
            if (!ok) continue;
            try {
                body(ws, static_cast<std::uint64_t>(t));
            } catch (...) {
                ok = false;
                std::lock_guard<std::mutex> g(lock);
                if (!failure) failure = std::current_exception();
            }
        }
        std::lock_guard<std::mutex> g(lock);
        if (ok) merge(ws);
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace linmimo
