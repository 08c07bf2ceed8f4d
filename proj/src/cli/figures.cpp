// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

// Presets behind `reproduce-figure N`. The same documents ship as
// configs/fig<N>.json; a unit test keeps the two in sync.

#include <map>

#include "linmimo/cli/commands.hpp"

namespace linmimo::cli {

namespace {

const std::map<int, const char*>& presets() {
    static const std::map<int, const char*> table{
        {2, R"({
  "command": "outage",
  "sweeps": [
    {"m_tx": 2, "n_rx": 2, "curves": [
      {"scheme": "coded_across_antennas", "receiver": "zf", "rate_bpcu": 1},
      {"scheme": "coded_across_antennas", "receiver": "mmse", "rate_bpcu": 1},
      {"scheme": "coded_across_antennas", "receiver": "zf", "rate_bpcu": 5},
      {"scheme": "coded_across_antennas", "receiver": "mmse", "rate_bpcu": 5}
    ]}
  ],
  "snr_db": {"start": 0, "stop": 40, "step": 2},
  "trials": 1000000,
  "seed": 2
})"},
        {3, R"({
  "command": "outage",
  "sweeps": [
    {"m_tx": 2, "n_rx": 2, "curves": [
      {"scheme": "optimal", "receiver": "optimal", "rate_bpcu": 3},
      {"scheme": "coded_across_antennas", "receiver": "mmse", "rate_bpcu": 3}
    ]},
    {"m_tx": 2, "n_rx": 4, "curves": [
      {"scheme": "optimal", "receiver": "optimal", "rate_bpcu": 3},
      {"scheme": "coded_across_antennas", "receiver": "mmse", "rate_bpcu": 3}
    ]},
    {"m_tx": 3, "n_rx": 3, "curves": [
      {"scheme": "optimal", "receiver": "optimal", "rate_bpcu": 3},
      {"scheme": "coded_across_antennas", "receiver": "mmse", "rate_bpcu": 3}
    ]}
  ],
  "snr_db": {"start": 0, "stop": 30, "step": 2},
  "trials": 1000000,
  "seed": 3
})"},
        {4, R"({
  "command": "outage",
  "sweeps": [
    {"m_tx": 4, "n_rx": 4, "curves": [
      {"scheme": "coded_across_antennas", "receiver": "mmse", "rate_bpcu": 0.7706},
      {"scheme": "coded_across_antennas", "receiver": "mmse", "rate_bpcu": 2.7123},
      {"scheme": "coded_across_antennas", "receiver": "mmse", "rate_bpcu": 5.6601},
      {"scheme": "coded_across_antennas", "receiver": "mmse", "rate_bpcu": 12},
      {"scheme": "mmse_upper_bound", "receiver": "mmse", "rate_bpcu": 0.7706},
      {"scheme": "mmse_upper_bound", "receiver": "mmse", "rate_bpcu": 2.7123},
      {"scheme": "mmse_upper_bound", "receiver": "mmse", "rate_bpcu": 5.6601},
      {"scheme": "mmse_upper_bound", "receiver": "mmse", "rate_bpcu": 12}
    ]}
  ],
  "snr_db": {"start": 0, "stop": 40, "step": 2},
  "trials": 1000000,
  "seed": 4,
  "slope_window_db": [20, 38],
  "slope_min_events": 10
})"},
        {5, R"({
  "command": "asymptotic",
  "receiver": "mmse",
  "m_tx": [2, 5, 10, 20],
  "beta": {"start": 0.1, "stop": 1, "step": 0.1},
  "snr_db": [3, 10, 30],
  "mc_trials": 2000,
  "seed": 5
})"},
        {6, R"({
  "command": "asymptotic",
  "receiver": "mmse",
  "m_tx": [2, 5, 10, 20],
  "beta": {"start": 0.1, "stop": 1, "step": 0.1},
  "snr_db": [3, 10, 30],
  "mc_trials": 2000,
  "seed": 6
})"},
        {7, R"({
  "command": "asymptotic",
  "receivers": ["mmse", "optimal"],
  "m_tx": [2, 3],
  "beta": [0.5],
  "snr_db": [3, 30],
  "cdf": [
    {"receiver": "mmse", "m_tx": 2, "beta": 0.5, "snr_db": 3, "trials": 100000},
    {"receiver": "mmse", "m_tx": 2, "beta": 0.5, "snr_db": 30, "trials": 100000},
    {"receiver": "mmse", "m_tx": 3, "beta": 0.5, "snr_db": 3, "trials": 100000},
    {"receiver": "mmse", "m_tx": 3, "beta": 0.5, "snr_db": 30, "trials": 100000},
    {"receiver": "optimal", "m_tx": 2, "beta": 0.5, "snr_db": 3, "trials": 100000},
    {"receiver": "optimal", "m_tx": 2, "beta": 0.5, "snr_db": 30, "trials": 100000},
    {"receiver": "optimal", "m_tx": 3, "beta": 0.5, "snr_db": 3, "trials": 100000},
    {"receiver": "optimal", "m_tx": 3, "beta": 0.5, "snr_db": 30, "trials": 100000}
  ],
  "seed": 7
})"},
        {8, R"({
  "command": "asymptotic",
  "receivers": ["mmse", "optimal"],
  "m_tx": [5, 10],
  "beta": [0.5],
  "snr_db": [3, 30],
  "cdf": [
    {"receiver": "mmse", "m_tx": 5, "beta": 0.5, "snr_db": 3, "trials": 100000},
    {"receiver": "mmse", "m_tx": 5, "beta": 0.5, "snr_db": 30, "trials": 100000},
    {"receiver": "mmse", "m_tx": 10, "beta": 0.5, "snr_db": 3, "trials": 100000},
    {"receiver": "mmse", "m_tx": 10, "beta": 0.5, "snr_db": 30, "trials": 100000},
    {"receiver": "optimal", "m_tx": 5, "beta": 0.5, "snr_db": 3, "trials": 100000},
    {"receiver": "optimal", "m_tx": 5, "beta": 0.5, "snr_db": 30, "trials": 100000},
    {"receiver": "optimal", "m_tx": 10, "beta": 0.5, "snr_db": 3, "trials": 100000},
    {"receiver": "optimal", "m_tx": 10, "beta": 0.5, "snr_db": 30, "trials": 100000}
  ],
  "seed": 8
})"},
    };
    return table;
}

}  // namespace

const std::vector<int>& figure_ids() {
    static const std::vector<int> ids = [] {
        std::vector<int> v;
        for (const auto& [id, _] : presets()) v.push_back(id);
        return v;
    }();
    return ids;
}

Json figure_config(int id) {
    const auto it = presets().find(id);
    if (it == presets().end())
        throw InvalidArgument("no preset for figure " + std::to_string(id) + " (expected 2..8)");
    return parse_json_text(it->second, "figure " + std::to_string(id));
}

std::string figure_command(int id) { return figure_config(id).at("command").get<std::string>(); }

}  // namespace linmimo::cli
