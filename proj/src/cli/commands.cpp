// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include "linmimo/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "linmimo/asymptotics.hpp"
#include "linmimo/dmt.hpp"
#include "linmimo/montecarlo.hpp"

namespace linmimo::cli {

namespace {

Json slope_json(const SlopeFit& fit) {
    return {{"slope", fit.slope}, {"used_db", fit.used_db}, {"excluded_db", fit.excluded_db}};
}

std::string excluded_warning(const std::string& label, const SlopeFit& fit) {
    std::ostringstream os;
    os << label << ": excluded " << fit.excluded_db.size()
       << " point(s) with no usable events from the slope fit";
    return os.str();
}

struct LinearMoments {
    double c1 = 0.0;
    double c2 = 0.0;
    bool valid = true;
};

LinearMoments analytic_moments(Receiver receiver, const SystemDims& dims, double rho) {
    switch (receiver) {
        case Receiver::mmse: {
            const AsymptoticMoments m = mmse_moments(dims, rho);
            return {m.c1, m.c2, m.valid};
        }
        case Receiver::zf: {
            const AsymptoticMoments m = zf_moments(dims, rho);
            return {m.c1, m.c2, m.valid};
        }
        case Receiver::optimal: {
            const OptimalAsymptotics o = optimal_asymptotics(dims, rho);
            return {dims.m_tx() * o.mu, o.nu2, true};
        }
    }
    return {};
}

double empirical_cdf(const std::vector<double>& sorted, double x) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
    return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
}

/// sup |F_gauss - F_emp| over samples between the 5% and 95% empirical quantiles.
double band_distance(const std::vector<double>& sorted, double c1, double c2) {
    const std::size_t n = sorted.size();
    const std::size_t lo = static_cast<std::size_t>(std::floor(0.05 * static_cast<double>(n)));
    const std::size_t hi = std::min(n - 1, static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(n))));
    double worst = 0.0;
    const double sd = std::sqrt(c2);
    for (std::size_t i = lo; i <= hi; ++i) {
        const double f = normal_cdf((sorted[i] - c1) / sd);
        const double above = static_cast<double>(i + 1) / static_cast<double>(n);
        const double below = static_cast<double>(i) / static_cast<double>(n);
        worst = std::max({worst, std::abs(f - above), std::abs(f - below)});
    }
    return worst;
}

}  // namespace

std::string error_name(const std::exception& e) {
    if (dynamic_cast<const BetaOneUnsupported*>(&e)) return "BetaOneUnsupported";
    if (dynamic_cast<const SingularGram*>(&e)) return "SingularGram";
    if (dynamic_cast<const InvalidRate*>(&e)) return "InvalidRate";
    if (dynamic_cast<const EpsilonOutOfRange*>(&e)) return "EpsilonOutOfRange";
    if (dynamic_cast<const NonpositiveVariance*>(&e)) return "NonpositiveVariance";
    if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
    if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
    if (dynamic_cast<const InsufficientPoints*>(&e)) return "InsufficientPoints";
    if (dynamic_cast<const NonConvergence*>(&e)) return "NonConvergence";
    if (dynamic_cast<const Error*>(&e)) return "Error";
    return "InternalError";
}

CommandOutput run_outage(const OutageConfig& config, Execution exec) {
    CommandOutput out;
    out.table = Table({"m_tx", "n_rx", "scheme", "receiver", "rate_bpcu", "snr_db", "p_hat",
                       "ci_low", "ci_high", "events", "trials"});
    Json slopes = Json::array();
    for (const OutageSweep& sweep : config.sweeps) {
        const SystemDims dims(sweep.m_tx, sweep.n_rx);
        std::vector<SweepQuery> queries;
        for (const CurveSpec& c : sweep.curves) queries.push_back({c.scheme, c.rate_bpcu});
        const auto result =
            sweep_outage_queries(queries, dims, config.snr_db, config.trials, config.seed, exec);
        for (std::size_t q = 0; q < queries.size(); ++q) {
            const CurveSpec& c = sweep.curves[q];
            std::vector<CurvePoint> curve;
            for (const SweepPoint& p : result[q]) {
                out.table.add_row({integer(sweep.m_tx), integer(sweep.n_rx),
                                   text(to_string(c.scheme.architecture)),
                                   text(to_string(c.scheme.receiver)), real(c.rate_bpcu),
                                   real(p.snr_db), probability(p.estimate.p_hat),
                                   probability(p.estimate.ci_low), probability(p.estimate.ci_high),
                                   integer(static_cast<std::int64_t>(p.estimate.events)),
                                   integer(static_cast<std::int64_t>(p.estimate.trials))});
                curve.push_back({p.snr_db, p.estimate.p_hat, p.estimate.trials});
            }
            if (!config.slope_window_db) continue;
            std::ostringstream label;
            label << sweep.m_tx << "x" << sweep.n_rx << " " << c.scheme.label() << " R="
                  << c.rate_bpcu;
            Json entry = {{"curve", label.str()}};
            try {
                const SlopeFit fit = fit_slope(curve, *config.slope_window_db, config.slope_min_events);
                entry.update(slope_json(fit));
                if (!fit.excluded_db.empty()) out.warnings.push_back(excluded_warning(label.str(), fit));
            } catch (const InsufficientPoints& e) {
                entry["error"] = e.what();
                out.warnings.push_back(label.str() + ": " + e.what());
            }
            slopes.push_back(entry);
        }
    }
    out.meta["seed"] = config.seed;
    out.meta["trials"] = config.trials;
    if (config.slope_window_db) {
        out.meta["slope_window_db"] = {config.slope_window_db->first, config.slope_window_db->second};
        out.meta["slopes"] = slopes;
    }
    return out;
}

CommandOutput run_asymptotic(const AsymptoticConfig& config, Execution exec) {
    CommandOutput out;
    out.table = Table({"receiver", "m_tx", "n_rx", "beta", "snr_db", "c1", "c2", "c1_per_antenna",
                       "valid", "mc_mean", "mc_var", "error"});
    for (Receiver r : config.receivers) {
        for (const auto& [m, n] : config.dims) {
            const SystemDims dims(m, n);
            for (double db : config.snr_db) {
                const double rho = db_to_linear(db);
                std::vector<Cell> row{text(to_string(r)), integer(m), integer(n), real(dims.beta()),
                                      real(db)};
                try {
                    const LinearMoments a = analytic_moments(r, dims, rho);
                    row.insert(row.end(), {real(a.c1), real(a.c2), real(a.c1 / m),
                                           integer(a.valid ? 1 : 0)});
                } catch (const Error& e) {
                    row.insert(row.end(), {blank(), blank(), blank(), integer(0)});
                    row.insert(row.end(), {blank(), blank(), text(error_name(e))});
                    out.table.add_row(std::move(row));
                    continue;
                }
                if (config.mc_trials > 0) {
                    const MomentEstimate e =
                        estimate_info_moments(r, dims, rho, config.mc_trials, config.seed, exec);
                    row.insert(row.end(), {real(e.mean), real(e.variance)});
                } else {
                    row.insert(row.end(), {blank(), blank()});
                }
                row.push_back(blank());
                out.table.add_row(std::move(row));
            }
        }
    }

    Json cdf_meta = Json::array();
    if (!config.cdf.empty()) {
        Table cdf({"receiver", "m_tx", "n_rx", "snr_db", "x_nats", "cdf_gaussian", "cdf_empirical"});
        for (const CdfRequest& q : config.cdf) {
            const SystemDims dims(q.m_tx, q.n_rx);
            const double rho = db_to_linear(q.snr_db);
            LinearMoments a;
            try {
                a = analytic_moments(q.receiver, dims, rho);
            } catch (const Error& e) {
                out.warnings.push_back("cdf " + std::string(to_string(q.receiver)) + " " +
                                       std::to_string(q.m_tx) + "x" + std::to_string(q.n_rx) +
                                       ": " + error_name(e));
                cdf_meta.push_back({{"receiver", to_string(q.receiver)}, {"m_tx", q.m_tx},
                                    {"n_rx", q.n_rx}, {"snr_db", q.snr_db}, {"error", error_name(e)}});
                continue;
            }
            std::vector<double> s =
                sample_mutual_information(q.receiver, dims, rho, q.trials, config.seed, exec);
            std::sort(s.begin(), s.end());
            const double lo = s[static_cast<std::size_t>(0.005 * static_cast<double>(s.size()))];
            const double hi = s[std::min(s.size() - 1, static_cast<std::size_t>(0.995 * static_cast<double>(s.size())))];
            for (int i = 0; i < q.points; ++i) {
                const double x = lo + (hi - lo) * i / (q.points - 1);
                const double fg = a.c2 > 0.0 ? normal_cdf((x - a.c1) / std::sqrt(a.c2)) : (x >= a.c1 ? 1.0 : 0.0);
                cdf.add_row({text(to_string(q.receiver)), integer(q.m_tx), integer(q.n_rx),
                             real(q.snr_db), real(x), real(fg), real(empirical_cdf(s, x))});
            }
            Json entry = {{"receiver", to_string(q.receiver)}, {"m_tx", q.m_tx}, {"n_rx", q.n_rx},
                          {"snr_db", q.snr_db}, {"trials", q.trials}, {"c1", a.c1}, {"c2", a.c2}};
            if (a.c2 > 0.0) entry["sup_distance_5_95"] = band_distance(s, a.c1, a.c2);
            cdf_meta.push_back(entry);
        }
        out.extras.emplace_back("cdf", std::move(cdf));
        out.meta["cdf"] = cdf_meta;
    }
    out.meta["seed"] = config.seed;
    return out;
}

CommandOutput run_dmt(const DmtConfig& config) {
    const SystemDims dims(config.m_tx, config.n_rx);
    CommandOutput out;
    out.table = Table({"record", "kind", "m_tx", "n_rx", "r", "d", "rate_bpcu", "t_frak", "m"});
    auto base = [&](std::string_view record, std::string_view kind) {
        return std::vector<Cell>{text(record), text(kind), integer(config.m_tx), integer(config.n_rx)};
    };
    for (DmtKind kind : {DmtKind::optimal, DmtKind::linear, DmtKind::parallel_iid}) {
        for (const auto& [r, d] : dmt_curve(kind, dims).breakpoints) {
            auto row = base("breakpoint", to_string(kind));
            row.insert(row.end(), {real(r), real(d), blank(), blank(), blank()});
            out.table.add_row(std::move(row));
        }
    }
    for (double r : config.r_grid) {
        const std::pair<DmtKind, double> values[] = {
            {DmtKind::optimal, dmt_optimal(dims).eval(r)},
            {DmtKind::linear, dmt_linear(dims, r)},
            {DmtKind::parallel_iid, dmt_parallel_iid(dims, r)}};
        for (const auto& [kind, d] : values) {
            auto row = base("grid", to_string(kind));
            row.insert(row.end(), {real(r), real(d), blank(), blank(), blank()});
            out.table.add_row(std::move(row));
        }
    }
    for (double rate : config.rates_bpcu) {
        const DiversityPrediction p = finite_rate_prediction(dims, rate);
        auto row = base("prediction", "mmse_finite_rate");
        row.insert(row.end(), {blank(), integer(p.d_pred), real(rate), real(p.t_frak), integer(p.m)});
        out.table.add_row(std::move(row));
        for (std::size_t i = 0; i < p.d_tilde.size(); ++i) {
            auto t = base("d_tilde", "mmse_finite_rate");
            t.insert(t.end(), {blank(), integer(p.d_tilde[i]), real(rate), real(p.t_frak),
                               integer(static_cast<std::int64_t>(i + 1))});
            out.table.add_row(std::move(t));
        }
    }
    return out;
}

CommandOutput run_slope_csv(const std::string& csv, std::pair<double, double> window_db,
                            std::uint64_t min_events) {
    const CsvData data = parse_csv(csv);
    const int c_snr = data.column("snr_db");
    const int c_p = data.column("p_hat");
    if (c_snr < 0 || c_p < 0) throw InvalidArgument("curve CSV needs snr_db and p_hat columns");
    const int c_trials = data.column("trials");
    std::vector<std::string> keys;
    std::vector<int> key_cols;
    for (const char* k : {"m_tx", "n_rx", "scheme", "receiver", "rate_bpcu"}) {
        const int c = data.column(k);
        if (c >= 0) {
            keys.emplace_back(k);
            key_cols.push_back(c);
        }
    }
    auto number = [](const std::string& s, std::size_t line) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw InvalidArgument("CSV line " + std::to_string(line) + ": '" + s + "' is not a number");
        }
    };
    std::vector<std::vector<std::string>> group_keys;
    std::map<std::vector<std::string>, std::vector<CurvePoint>> groups;
    for (std::size_t r = 0; r < data.rows.size(); ++r) {
        const auto& row = data.rows[r];
        std::vector<std::string> key;
        for (int c : key_cols) key.push_back(row[c]);
        if (!groups.count(key)) group_keys.push_back(key);
        CurvePoint p{number(row[c_snr], r + 2), number(row[c_p], r + 2), 0};
        if (c_trials >= 0) p.trials = static_cast<std::uint64_t>(number(row[c_trials], r + 2));
        groups[key].push_back(p);
    }

    std::vector<std::string> header = keys;
    header.insert(header.end(), {"slope", "points_used", "points_excluded", "error"});
    CommandOutput out;
    out.table = Table(header);
    for (const auto& key : group_keys) {
        std::vector<Cell> row;
        for (const auto& k : key) row.push_back(text(k));
        std::string label;
        for (const auto& k : key) label += (label.empty() ? "" : " ") + k;
        if (label.empty()) label = "curve";
        try {
            const SlopeFit fit = fit_slope(groups[key], window_db, min_events);
            row.insert(row.end(), {real(fit.slope), integer(static_cast<std::int64_t>(fit.used_db.size())),
                                   integer(static_cast<std::int64_t>(fit.excluded_db.size())), blank()});
            if (!fit.excluded_db.empty()) out.warnings.push_back(excluded_warning(label, fit));
        } catch (const InsufficientPoints& e) {
            row.insert(row.end(), {blank(), blank(), blank(), text("InsufficientPoints")});
            out.warnings.push_back(label + ": " + e.what());
            out.exit_code = 1;
        }
        out.table.add_row(std::move(row));
    }
    out.meta["window_db"] = {window_db.first, window_db.second};
    out.meta["min_events"] = min_events;
    return out;
}

CommandOutput run_slope(const SlopeConfig& config) {
    std::ifstream in(config.curve_path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open curve file '" + config.curve_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    CommandOutput out = run_slope_csv(ss.str(), config.window_db, config.min_events);
    out.meta["curve"] = config.curve_path;
    return out;
}

}  // namespace linmimo::cli
