// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <functional>

#include "linmimo/asymptotics.hpp"
#include "linmimo/cli/commands.hpp"
#include "linmimo/kernels.hpp"
#include "linmimo/montecarlo.hpp"

namespace linmimo::cli {

namespace {

// Five-point stencils with one Richardson step; error O(h^6).
double central_first(const std::function<double(double)>& f, double x, double h) {
    auto d = [&](double s) {
        return (f(x - 2 * s) - 8 * f(x - s) + 8 * f(x + s) - f(x + 2 * s)) / (12 * s);
    };
    return (16 * d(h / 2) - d(h)) / 15;
}

double backward_first(const std::function<double(double)>& f, double x, double h) {
    auto d = [&](double s) {
        return (25 * f(x) - 48 * f(x - s) + 36 * f(x - 2 * s) - 16 * f(x - 3 * s) + 3 * f(x - 4 * s)) /
               (12 * s);
    };
    return (16 * d(h / 2) - d(h)) / 15;
}

double central_second(const std::function<double(double)>& f, double x, double h) {
    auto d = [&](double s) {
        return (-f(x - 2 * s) + 16 * f(x - s) - 30 * f(x) + 16 * f(x + s) - f(x + 2 * s)) / (12 * s * s);
    };
    return (16 * d(h / 2) - d(h)) / 15;
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

Json suite_fixed_points() {
    double worst_oracle = 0.0;
    double worst_residual = 0.0;
    double worst_g2 = 0.0;
    double worst_g3 = 0.0;
    double worst_db = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double alpha = std::pow(10.0, -2.0 + 5.0 * i / 19.0);
        for (int k = 0; k < 20; ++k) {
            const double beta = 0.05 + 0.95 * k / 19.0;
            const GMoments g = g_moments(alpha, beta);
            const double oracle = g1_fixed_point_oracle(alpha, beta);
            worst_oracle = std::max(worst_oracle, std::abs(g.g1 - oracle) / std::max(1.0, g.g1));
            worst_residual = std::max(
                worst_residual,
                std::abs(g.g1 - alpha / (1 + alpha * beta / (1 + g.g1))) / (1 + g.g1));
            auto in_alpha = [beta](double a) { return g1_mmse(a, beta); };
            auto in_beta = [alpha](double b) { return g1_mmse(alpha, b); };
            const double h = 1e-2 * alpha;
            const double d1 = central_first(in_alpha, alpha, h);
            const double d2 = central_second(in_alpha, alpha, 5 * h);
            worst_g2 = std::max(worst_g2, rel_err(g.g2, alpha * alpha * d1));
            worst_g3 = std::max(worst_g3, rel_err(g.g3, 0.5 * alpha * alpha * alpha * (alpha * d2 + 2 * d1)));
            const double hb = 1e-3;
            const double db = beta + 2 * hb <= 1.0 ? central_first(in_beta, beta, hb)
                                                   : backward_first(in_beta, beta, hb);
            worst_db = std::max(worst_db, rel_err(g.dg1_dbeta, db));
        }
    }
    const bool ok = worst_oracle <= 1e-12 && worst_residual <= 1e-10 && worst_g2 <= 1e-6 &&
                    worst_g3 <= 1e-6 && worst_db <= 1e-6;
    return {{"suite", "fixed_points"},
            {"passed", ok},
            {"grid", "20 x 20, alpha in [1e-2, 1e3] log-spaced, beta in [0.05, 1]"},
            {"max_oracle_gap", worst_oracle},
            {"max_fixed_point_residual", worst_residual},
            {"max_rel_err_g2", worst_g2},
            {"max_rel_err_g3", worst_g3},
            {"max_rel_err_dg1_dbeta", worst_db}};
}

Json suite_novikov(std::uint64_t trials, std::uint64_t seed, Execution exec) {
    const int n = 100;
    Json rows = Json::array();
    bool ok = true;
    for (const NovikovRow& r : novikov_fourth_moment_check(n, trials, seed, exec)) {
        ok = ok && r.z_score < 3.0;
        rows.push_back({{"pattern", r.pattern}, {"empirical_re", r.empirical_re},
                        {"empirical_im", r.empirical_im}, {"predicted", r.predicted},
                        {"z_score", r.z_score}});
    }
    return {{"suite", "novikov"}, {"passed", ok}, {"n_dim", n}, {"trials", trials}, {"patterns", rows}};
}

Json suite_trace_variance(std::uint64_t trials, std::uint64_t seed, Execution exec) {
    const TraceVarianceEstimate e = estimate_trace_variance(64, 0.5, 1.0, trials, seed, exec);
    const double cf = trace_variance_closed_form(1.0, 0.5);
    const double rel = std::abs(e.variance - cf) / cf;
    return {{"suite", "trace_variance"}, {"passed", rel <= 0.05}, {"n_dim", 64}, {"beta", 0.5},
            {"alpha", 1.0}, {"trials", trials}, {"empirical", e.variance},
            {"std_error", e.std_error}, {"closed_form", cf}, {"rel_err", rel}};
}

Json suite_cumulant_decay(std::uint64_t trials, std::uint64_t seed, Execution exec) {
    const int sizes[] = {8, 64};
    const auto pts = higher_cumulant_decay_check(Receiver::mmse, 0.5, db_to_linear(3.0), sizes,
                                                 trials, seed, exec);
    const double margin = pts[0].abs_skewness - pts[1].abs_skewness;
    const double se = std::hypot(pts[0].std_error, pts[1].std_error);
    Json rows = Json::array();
    for (const SkewnessPoint& p : pts)
        rows.push_back({{"n_rx", p.n_rx}, {"m_tx", p.m_tx}, {"abs_skewness", p.abs_skewness},
                        {"std_error", p.std_error}});
    return {{"suite", "cumulant_decay"}, {"passed", margin > se}, {"trials", trials},
            {"points", rows}, {"margin", margin}, {"combined_std_error", se}};
}

Json suite_gamma_marginal(std::uint64_t trials, std::uint64_t seed, Execution exec) {
    const SystemDims dims(2, 8);
    const double rho = 10.0;
    const std::vector<double> g = kernels::sinrs(Receiver::zf, dims, rho, trials, seed, exec);
    std::vector<double> first(trials);
    for (std::uint64_t t = 0; t < trials; ++t) first[t] = g[t * 2] / (rho / 2);
    const double ks = ks_distance(first, [](double x) { return gamma_cdf_integer_shape(7, x); });
    return {{"suite", "gamma_marginal"}, {"passed", ks <= 0.01}, {"m_tx", 2}, {"n_rx", 8},
            {"rho", rho}, {"trials", trials}, {"shape", 7}, {"ks_distance", ks}};
}

}  // namespace

CommandOutput run_validate(const ValidateConfig& config, Execution exec) {
    CommandOutput out;
    Json suites = Json::array();
    bool all = true;
    auto budget = [&](std::uint64_t fallback) { return config.trials.value_or(fallback); };
    for (const std::string& name : config.suites) {
        Json r;
        if (name == "fixed_points") r = suite_fixed_points();
        else if (name == "novikov") r = suite_novikov(budget(1000000), config.seed, exec);
        else if (name == "trace_variance") r = suite_trace_variance(budget(100000), config.seed, exec);
        else if (name == "cumulant_decay") r = suite_cumulant_decay(budget(100000), config.seed, exec);
        else if (name == "gamma_marginal") r = suite_gamma_marginal(budget(100000), config.seed, exec);
        else throw InvalidArgument("unknown suite '" + name + "'");
        all = all && r.at("passed").get<bool>();
        suites.push_back(std::move(r));
    }
    out.report = Json{{"passed", all}, {"seed", config.seed}, {"suites", suites}};
    out.exit_code = all ? 0 : 1;
    out.meta["seed"] = config.seed;
    return out;
}

}  // namespace linmimo::cli
