// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "linmimo/types.hpp"

namespace linmimo {

enum class DmtKind { optimal, linear, parallel_iid };

std::string_view to_string(DmtKind k);

/// Piecewise-linear diversity-multiplexing curve. Breakpoints start at r = 0,
/// d is nonincreasing and the last breakpoint has d = 0.
struct DmtCurve {
    std::vector<std::pair<double, double>> breakpoints;
    DmtKind kind = DmtKind::optimal;

    /// Linear interpolation; 0 beyond the last breakpoint. Requires r >= 0.
    double eval(double r) const;
};

/// Breakpoints (k, (M-k)(N-k)) for k = 0..M.
DmtCurve dmt_optimal(const SystemDims& dims);

/// (N - M + 1)(1 - r/M)^+.
double dmt_linear(const SystemDims& dims, double r);

/// (N - M + 1)(M - r)^+.
double dmt_parallel_iid(const SystemDims& dims, double r);

/// The linear and parallel-iid laws as two-point curves.
DmtCurve dmt_curve(DmtKind kind, const SystemDims& dims);

struct DiversityPrediction {
    double rate_bits = 0.0;
    double t_frak = 0.0;            ///< M 2^{-R/M}
    int m = 1;                      ///< smallest integer >= t_frak, clamped to [1, M]
    int d_pred = 1;                 ///< m (m + N - M)
    std::vector<int> d_tilde;       ///< i (i + N - M) for i = 1..M
};

/// Finite-rate diversity of MMSE with spatial encoding. Throws InvalidRate
/// for rate_bits <= 0.
DiversityPrediction finite_rate_prediction(const SystemDims& dims, double rate_bits);

/// Fraction of the unit sphere in R^M covered by the cap of angular radius
/// phi = atan(eps sqrt(1 - eps^2/4) / (1 - eps^2/2)). Requires m_dim >= 2 and
/// eps in (0, sqrt 2); throws EpsilonOutOfRange otherwise.
double spherical_cap_probability(int m_dim, double epsilon);

}  // namespace linmimo
