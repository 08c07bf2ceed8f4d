// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <span>

#include "linmimo/montecarlo.hpp"
#include "linmimo/receivers.hpp"

namespace linmimo::detail {

/// Outage predicate on precomputed per-realization quantities. `gammas` are
/// the SINRs of the scheme's receiver and are ignored by eigenvalue-only
/// architectures.
inline bool scheme_event(Architecture arch, std::span<const double> gammas,
                         std::span<const double> eigenvalues, double rho, double rate_nats) {
    const double m = static_cast<double>(eigenvalues.size());
    switch (arch) {
        case Architecture::optimal:
            return optimal_info_from_eigenvalues(eigenvalues, rho) <= rate_nats;
        case Architecture::coded_across_antennas:
            return sum_log1p(gammas) <= rate_nats;
        case Architecture::spatial_multiplexing:
            return min_log1p(gammas) <= rate_nats / m;
        case Architecture::mmse_upper_bound:
            return mmse_bound_from_eigenvalues(eigenvalues, rho) >= std::exp(-rate_nats / m);
        case Architecture::zf_upper_bound:
            return std::log1p(rho / m * eigenvalues.front()) <= rate_nats / m;
    }
    return false;
}

inline bool needs_sinrs(Architecture arch) {
    return arch == Architecture::coded_across_antennas ||
           arch == Architecture::spatial_multiplexing;
}

}  // namespace linmimo::detail
