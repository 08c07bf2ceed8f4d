// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

// Typed experiment configurations. Every parser validates the complete
// document before returning, rejects unknown keys, and reports failures as
// ConfigError with a JSON-path location such as "$.sweeps[1].curves[0].rate_bpcu".

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "linmimo/montecarlo.hpp"
#include "linmimo/types.hpp"

namespace linmimo::cli {

using Json = nlohmann::json;

class ConfigError : public InvalidArgument {
  public:
    ConfigError(std::string where, const std::string& what)
        : InvalidArgument(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

  private:
    std::string where_;
};

/// Parses JSON text; syntax errors carry "line L, column C".
Json parse_json_text(const std::string& content, const std::string& origin);
Json load_json_file(const std::string& path);

struct CurveSpec {
    SchemeSpec scheme;
    double rate_bpcu = 0.0;
};

struct OutageSweep {
    int m_tx = 1;
    int n_rx = 1;
    std::vector<CurveSpec> curves;
};

struct OutageConfig {
    std::vector<OutageSweep> sweeps;
    std::vector<double> snr_db;
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;
    std::optional<std::pair<double, double>> slope_window_db;
    std::uint64_t slope_min_events = 1;
};

struct CdfRequest {
    Receiver receiver = Receiver::mmse;
    int m_tx = 1;
    int n_rx = 1;
    double snr_db = 0.0;
    std::uint64_t trials = 0;
    int points = 101;
};

struct AsymptoticConfig {
    std::vector<Receiver> receivers;
    /// (m_tx, n_rx) grid, expanded from m_tx x beta or m_tx x n_rx.
    std::vector<std::pair<int, int>> dims;
    std::vector<double> snr_db;
    std::uint64_t mc_trials = 0;  ///< 0 disables the Monte Carlo overlay
    std::vector<CdfRequest> cdf;
    std::uint64_t seed = 1;
};

struct DmtConfig {
    int m_tx = 1;
    int n_rx = 1;
    std::vector<double> r_grid;
    std::vector<double> rates_bpcu;
};

struct SlopeConfig {
    std::string curve_path;
    std::pair<double, double> window_db{0.0, 0.0};
    std::uint64_t min_events = 1;
};

struct ValidateConfig {
    std::vector<std::string> suites;
    std::optional<std::uint64_t> trials;
    std::uint64_t seed = 1;
};

/// Names accepted by ValidateConfig::suites ("all" expands to every suite).
const std::vector<std::string>& validate_suite_names();

OutageConfig parse_outage_config(const Json& j);
AsymptoticConfig parse_asymptotic_config(const Json& j);
DmtConfig parse_dmt_config(const Json& j);
SlopeConfig parse_slope_config(const Json& j);
ValidateConfig parse_validate_config(const Json& j);

/// Expands {"start": a, "stop": b, "step": s} (inclusive) or returns a list.
std::vector<double> expand_grid(double start, double stop, double step);

}  // namespace linmimo::cli
