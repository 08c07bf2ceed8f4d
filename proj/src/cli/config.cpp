// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include "linmimo/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace linmimo::cli {

namespace {

// Walks one JSON object, recording consumed keys so leftovers can be rejected.
class Fields {
  public:
    Fields(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ConfigError(path_, "expected an object");
    }

    std::string at(const std::string& key) const { return path_ + "." + key; }

    bool has(const std::string& key) {
        seen_.insert(key);
        return j_.contains(key);
    }

    const Json& get(const std::string& key) {
        if (!has(key)) throw ConfigError(at(key), "required field is missing");
        return j_.at(key);
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key())) throw ConfigError(at(it.key()), "unknown field");
    }

  private:
    const Json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

double as_real(const Json& v, const std::string& where) {
    if (!v.is_number()) throw ConfigError(where, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(where, "must be finite");
    return x;
}

std::int64_t as_int(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_number_float()) {
        const double x = v.get<double>();
        if (x == std::floor(x) && std::abs(x) < 9e15) return static_cast<std::int64_t>(x);
    }
    throw ConfigError(where, "expected an integer");
}

std::uint64_t as_count(const Json& v, const std::string& where, std::uint64_t minimum) {
    if (v.is_number_unsigned()) {
        const auto n = v.get<std::uint64_t>();
        if (n < minimum) throw ConfigError(where, "must be >= " + std::to_string(minimum));
        return n;
    }
    const std::int64_t n = as_int(v, where);
    if (n < static_cast<std::int64_t>(minimum))
        throw ConfigError(where, "must be >= " + std::to_string(minimum));
    return static_cast<std::uint64_t>(n);
}

std::string as_string(const Json& v, const std::string& where) {
    if (!v.is_string()) throw ConfigError(where, "expected a string");
    return v.get<std::string>();
}

template <class F>
auto wrap(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(where, e.what());
    }
}

int parse_dim(const Json& v, const std::string& where) {
    const std::int64_t n = as_int(v, where);
    if (n < 1 || n > 4096) throw ConfigError(where, "must lie in [1, 4096]");
    return static_cast<int>(n);
}

/// A list of reals, or {"start", "stop", "step"}.
std::vector<double> parse_grid(const Json& v, const std::string& where) {
    std::vector<double> out;
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out.push_back(as_real(v[i], where + "[" + std::to_string(i) + "]"));
    } else if (v.is_object()) {
        Fields f(v, where);
        const double start = as_real(f.get("start"), f.at("start"));
        const double stop = as_real(f.get("stop"), f.at("stop"));
        const double step = as_real(f.get("step"), f.at("step"));
        f.finish();
        if (!(step > 0.0)) throw ConfigError(f.at("step"), "must be > 0");
        if (stop < start) throw ConfigError(f.at("stop"), "must be >= start");
        out = expand_grid(start, stop, step);
    } else if (v.is_number()) {
        out.push_back(as_real(v, where));
    } else {
        throw ConfigError(where, "expected a number, a list, or {start, stop, step}");
    }
    if (out.empty()) throw ConfigError(where, "must not be empty");
    return out;
}

void require_increasing(const std::vector<double>& v, const std::string& where) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1]))
            throw ConfigError(where + "[" + std::to_string(i) + "]", "values must be strictly increasing");
}

std::pair<double, double> parse_window(const Json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) throw ConfigError(where, "expected [lo, hi]");
    const double lo = as_real(v[0], where + "[0]");
    const double hi = as_real(v[1], where + "[1]");
    if (!(hi > lo)) throw ConfigError(where, "hi must exceed lo");
    return {lo, hi};
}

Receiver parse_receiver_at(const Json& v, const std::string& where) {
    return wrap(where, [&] { return parse_receiver(as_string(v, where)); });
}

CurveSpec parse_curve(Fields& f) {
    CurveSpec c;
    c.scheme.architecture = wrap(f.at("scheme"), [&] {
        return parse_architecture(as_string(f.get("scheme"), f.at("scheme")));
    });
    c.scheme.receiver = parse_receiver_at(f.get("receiver"), f.at("receiver"));
    wrap(f.at("receiver"), [&] {
        c.scheme.validate();
        return 0;
    });
    c.rate_bpcu = as_real(f.get("rate_bpcu"), f.at("rate_bpcu"));
    if (!(c.rate_bpcu > 0.0)) throw ConfigError(f.at("rate_bpcu"), "must be > 0");
    return c;
}

void check_dims(int m, int n, const std::string& where) {
    if (n < m) throw ConfigError(where, "n_rx must be >= m_tx");
}

}  // namespace

std::vector<double> expand_grid(double start, double stop, double step) {
    std::vector<double> out;
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    if (count > 100000) throw InvalidArgument("grid has more than 100000 points");
    for (long i = 0; i <= count; ++i) {
        // Rounded to 1e-9 so 0.1-steps print as written.
        const double x = start + static_cast<double>(i) * step;
        out.push_back(std::round(x * 1e9) / 1e9);
    }
    return out;
}

Json parse_json_text(const std::string& content, const std::string& origin) {
    try {
        return Json::parse(content);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, content.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (content[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(col),
                          std::string("JSON syntax error (") + e.what() + ")");
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

const std::vector<std::string>& validate_suite_names() {
    static const std::vector<std::string> names{"novikov", "trace_variance", "cumulant_decay",
                                                "gamma_marginal", "fixed_points"};
    return names;
}

OutageConfig parse_outage_config(const Json& j) {
    Fields f(j, "$");
    if (f.has("command") && j.at("command") != "outage")
        throw ConfigError(f.at("command"), "expected \"outage\"");
    OutageConfig c;
    if (f.has("sweeps")) {
        const Json& sweeps = j.at("sweeps");
        if (!sweeps.is_array() || sweeps.empty())
            throw ConfigError(f.at("sweeps"), "expected a nonempty list");
        for (std::size_t s = 0; s < sweeps.size(); ++s) {
            const std::string sp = f.at("sweeps") + "[" + std::to_string(s) + "]";
            Fields fs(sweeps[s], sp);
            OutageSweep sweep;
            sweep.m_tx = parse_dim(fs.get("m_tx"), fs.at("m_tx"));
            sweep.n_rx = parse_dim(fs.get("n_rx"), fs.at("n_rx"));
            check_dims(sweep.m_tx, sweep.n_rx, fs.at("n_rx"));
            const Json& curves = fs.get("curves");
            if (!curves.is_array() || curves.empty())
                throw ConfigError(fs.at("curves"), "expected a nonempty list");
            for (std::size_t k = 0; k < curves.size(); ++k) {
                Fields fc(curves[k], fs.at("curves") + "[" + std::to_string(k) + "]");
                sweep.curves.push_back(parse_curve(fc));
                fc.finish();
            }
            fs.finish();
            c.sweeps.push_back(std::move(sweep));
        }
    } else {
        OutageSweep sweep;
        sweep.m_tx = parse_dim(f.get("m_tx"), f.at("m_tx"));
        sweep.n_rx = parse_dim(f.get("n_rx"), f.at("n_rx"));
        check_dims(sweep.m_tx, sweep.n_rx, f.at("n_rx"));
        sweep.curves.push_back(parse_curve(f));
        c.sweeps.push_back(std::move(sweep));
    }
    c.snr_db = parse_grid(f.get("snr_db"), f.at("snr_db"));
    require_increasing(c.snr_db, f.at("snr_db"));
    c.trials = as_count(f.get("trials"), f.at("trials"), 1);
    if (f.has("seed")) c.seed = as_count(j.at("seed"), f.at("seed"), 0);
    if (f.has("slope_window_db")) c.slope_window_db = parse_window(j.at("slope_window_db"), f.at("slope_window_db"));
    if (f.has("slope_min_events"))
        c.slope_min_events = as_count(j.at("slope_min_events"), f.at("slope_min_events"), 1);
    f.finish();
    return c;
}

AsymptoticConfig parse_asymptotic_config(const Json& j) {
    Fields f(j, "$");
    if (f.has("command") && j.at("command") != "asymptotic")
        throw ConfigError(f.at("command"), "expected \"asymptotic\"");
    AsymptoticConfig c;
    auto parse_receivers = [&](const Json& v, const std::string& where) {
        std::vector<Receiver> out;
        if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i)
                out.push_back(parse_receiver_at(v[i], where + "[" + std::to_string(i) + "]"));
        } else {
            out.push_back(parse_receiver_at(v, where));
        }
        if (out.empty()) throw ConfigError(where, "must not be empty");
        return out;
    };
    if (f.has("receiver")) c.receivers = parse_receivers(j.at("receiver"), f.at("receiver"));
    else if (f.has("receivers")) c.receivers = parse_receivers(j.at("receivers"), f.at("receivers"));
    else throw ConfigError(f.at("receiver"), "required field is missing");

    std::vector<int> ms;
    const Json& mv = f.get("m_tx");
    if (mv.is_array()) {
        for (std::size_t i = 0; i < mv.size(); ++i)
            ms.push_back(parse_dim(mv[i], f.at("m_tx") + "[" + std::to_string(i) + "]"));
        if (ms.empty()) throw ConfigError(f.at("m_tx"), "must not be empty");
    } else {
        ms.push_back(parse_dim(mv, f.at("m_tx")));
    }
    const bool has_beta = f.has("beta");
    const bool has_n = f.has("n_rx");
    if (has_beta == has_n) throw ConfigError(f.at("beta"), "give exactly one of beta or n_rx");
    if (has_beta) {
        const std::vector<double> betas = parse_grid(j.at("beta"), f.at("beta"));
        for (std::size_t i = 0; i < betas.size(); ++i)
            if (!(betas[i] > 0.0 && betas[i] <= 1.0))
                throw ConfigError(f.at("beta") + "[" + std::to_string(i) + "]", "must lie in (0, 1]");
        for (int m : ms)
            for (double b : betas) {
                const int n = static_cast<int>(std::lround(m / b));
                if (std::find(c.dims.begin(), c.dims.end(), std::pair{m, n}) == c.dims.end())
                    c.dims.emplace_back(m, n);
            }
    } else {
        const int n = parse_dim(j.at("n_rx"), f.at("n_rx"));
        for (int m : ms) {
            check_dims(m, n, f.at("n_rx"));
            c.dims.emplace_back(m, n);
        }
    }
    c.snr_db = parse_grid(f.get("snr_db"), f.at("snr_db"));
    if (f.has("seed")) c.seed = as_count(j.at("seed"), f.at("seed"), 0);
    if (f.has("mc_trials")) c.mc_trials = as_count(j.at("mc_trials"), f.at("mc_trials"), 100);
    if (f.has("cdf")) {
        const Json& cv = j.at("cdf");
        const std::vector<Json> items = cv.is_array() ? cv.get<std::vector<Json>>() : std::vector<Json>{cv};
        for (std::size_t i = 0; i < items.size(); ++i) {
            const std::string where = f.at("cdf") + (cv.is_array() ? "[" + std::to_string(i) + "]" : "");
            Fields fc(items[i], where);
            CdfRequest r;
            r.receiver = parse_receiver_at(fc.get("receiver"), fc.at("receiver"));
            r.m_tx = parse_dim(fc.get("m_tx"), fc.at("m_tx"));
            if (fc.has("n_rx")) {
                r.n_rx = parse_dim(items[i].at("n_rx"), fc.at("n_rx"));
            } else if (fc.has("beta")) {
                const double b = as_real(items[i].at("beta"), fc.at("beta"));
                if (!(b > 0.0 && b <= 1.0)) throw ConfigError(fc.at("beta"), "must lie in (0, 1]");
                r.n_rx = static_cast<int>(std::lround(r.m_tx / b));
            } else {
                throw ConfigError(fc.at("n_rx"), "give n_rx or beta");
            }
            check_dims(r.m_tx, r.n_rx, fc.at("n_rx"));
            r.snr_db = as_real(fc.get("snr_db"), fc.at("snr_db"));
            r.trials = as_count(fc.get("trials"), fc.at("trials"), 100);
            if (fc.has("points")) {
                const std::int64_t p = as_int(items[i].at("points"), fc.at("points"));
                if (p < 3 || p > 100000) throw ConfigError(fc.at("points"), "must lie in [3, 100000]");
                r.points = static_cast<int>(p);
            }
            fc.finish();
            c.cdf.push_back(r);
        }
    }
    f.finish();
    return c;
}

DmtConfig parse_dmt_config(const Json& j) {
    Fields f(j, "$");
    if (f.has("command") && j.at("command") != "dmt")
        throw ConfigError(f.at("command"), "expected \"dmt\"");
    DmtConfig c;
    c.m_tx = parse_dim(f.get("m_tx"), f.at("m_tx"));
    c.n_rx = parse_dim(f.get("n_rx"), f.at("n_rx"));
    check_dims(c.m_tx, c.n_rx, f.at("n_rx"));
    if (f.has("r_grid")) {
        c.r_grid = parse_grid(j.at("r_grid"), f.at("r_grid"));
        for (std::size_t i = 0; i < c.r_grid.size(); ++i)
            if (!(c.r_grid[i] >= 0.0))
                throw ConfigError(f.at("r_grid") + "[" + std::to_string(i) + "]", "must be >= 0");
    }
    if (f.has("rates_bpcu")) {
        c.rates_bpcu = parse_grid(j.at("rates_bpcu"), f.at("rates_bpcu"));
        for (std::size_t i = 0; i < c.rates_bpcu.size(); ++i)
            if (!(c.rates_bpcu[i] > 0.0))
                throw ConfigError(f.at("rates_bpcu") + "[" + std::to_string(i) + "]", "must be > 0");
    }
    f.finish();
    return c;
}

SlopeConfig parse_slope_config(const Json& j) {
    Fields f(j, "$");
    if (f.has("command") && j.at("command") != "slope")
        throw ConfigError(f.at("command"), "expected \"slope\"");
    SlopeConfig c;
    c.curve_path = as_string(f.get("curve"), f.at("curve"));
    c.window_db = parse_window(f.get("window_db"), f.at("window_db"));
    if (f.has("min_events")) c.min_events = as_count(j.at("min_events"), f.at("min_events"), 1);
    f.finish();
    return c;
}

ValidateConfig parse_validate_config(const Json& j) {
    Fields f(j, "$");
    if (f.has("command") && j.at("command") != "validate")
        throw ConfigError(f.at("command"), "expected \"validate\"");
    ValidateConfig c;
    const Json& s = f.get("suite");
    const std::vector<Json> items = s.is_array() ? s.get<std::vector<Json>>() : std::vector<Json>{s};
    if (items.empty()) throw ConfigError(f.at("suite"), "must not be empty");
    const auto& known = validate_suite_names();
    for (std::size_t i = 0; i < items.size(); ++i) {
        const std::string where = f.at("suite") + (s.is_array() ? "[" + std::to_string(i) + "]" : "");
        const std::string name = as_string(items[i], where);
        if (name == "all") {
            c.suites.insert(c.suites.end(), known.begin(), known.end());
        } else if (std::find(known.begin(), known.end(), name) != known.end()) {
            c.suites.push_back(name);
        } else {
            throw ConfigError(where, "unknown suite '" + name + "'");
        }
    }
    if (f.has("trials")) c.trials = as_count(j.at("trials"), f.at("trials"), 100);
    if (f.has("seed")) c.seed = as_count(j.at("seed"), f.at("seed"), 0);
    f.finish();
    return c;
}

}  // namespace linmimo::cli
