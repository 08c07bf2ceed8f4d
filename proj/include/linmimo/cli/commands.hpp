// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linmimo/cli/config.hpp"
#include "linmimo/cli/table.hpp"
#include "linmimo/parallel.hpp"

namespace linmimo::cli {

struct CommandOutput {
    Table table{{}};
    /// Secondary tables written next to the main output as <stem>.<suffix>.csv.
    std::vector<std::pair<std::string, Table>> extras;
    /// Primary output when set (validate); replaces `table`.
    std::optional<Json> report;
    /// Merged into the metadata sidecar.
    Json meta = Json::object();
    std::vector<std::string> warnings;
    int exit_code = 0;
};

/// Class name of a library error ("BetaOneUnsupported", "InvalidRate", ...).
std::string error_name(const std::exception& e);

CommandOutput run_outage(const OutageConfig& config, Execution exec);
CommandOutput run_asymptotic(const AsymptoticConfig& config, Execution exec);
CommandOutput run_dmt(const DmtConfig& config);
CommandOutput run_slope(const SlopeConfig& config);
/// Slope of every curve group in a CSV with at least snr_db and p_hat columns.
CommandOutput run_slope_csv(const std::string& csv, std::pair<double, double> window_db,
                            std::uint64_t min_events);
CommandOutput run_validate(const ValidateConfig& config, Execution exec);

/// Figure presets, identical to configs/fig<N>.json.
const std::vector<int>& figure_ids();
Json figure_config(int id);
/// Subcommand that consumes figure_config(id).
std::string figure_command(int id);

/// Full command-line entry point; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linmimo::cli
