// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <ostream>

#include "linmimo/cli/commands.hpp"

#ifndef LINMIMO_VERSION
#define LINMIMO_VERSION "0.0.0"
#endif

namespace linmimo::cli {

namespace {

struct CommonOptions {
    std::string config;
    std::string out;
    int workers = 0;
    std::optional<std::uint64_t> seed;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& o, bool config_required) {
    auto* c = cmd->add_option("--config", o.config, "JSON experiment configuration");
    if (config_required) c->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", o.out, "output file (stdout when omitted)");
    cmd->add_option("--workers", o.workers, "OpenMP threads; 0 uses the runtime default")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", o.seed, "master seed; overrides the configuration");
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write '" + path + "'");
    f << body;
}

std::string sibling_path(const std::string& out, const std::string& suffix, Format fmt) {
    const std::size_t slash = out.find_last_of('/');
    const std::size_t dot = out.find_last_of('.');
    const std::string stem =
        dot != std::string::npos && (slash == std::string::npos || dot > slash) ? out.substr(0, dot) : out;
    return stem + "." + suffix + (fmt == Format::csv ? ".csv" : ".json");
}

int emit(const CommandOutput& result, const std::string& command, const Json& config,
         const CommonOptions& o, double wall_s, std::ostream& out, std::ostream& err) {
    const Format fmt = parse_format(o.format);
    const std::string body = result.report ? result.report->dump(2) + "\n" : result.table.render(fmt);
    for (const std::string& w : result.warnings) err << "warning: " << w << "\n";
    if (o.out.empty()) {
        out << body;
        if (!result.extras.empty())
            err << "note: " << result.extras.size() << " secondary table(s) are written only with --out\n";
    } else {
        write_file(o.out, body);
        for (const auto& [suffix, table] : result.extras)
            write_file(sibling_path(o.out, suffix, fmt), table.render(fmt));
        Json meta = {{"command", command},    {"version", LINMIMO_VERSION},
                     {"workers", Execution{o.workers}.resolved()}, {"format", o.format},
                     {"wall_time_s", wall_s}, {"config", config}};
        meta.update(result.meta);
        write_file(o.out + ".meta.json", meta.dump(2) + "\n");
    }
    return result.exit_code;
}

void apply_seed(Json& j, const std::optional<std::uint64_t>& seed) {
    if (seed) j["seed"] = *seed;
}

/// Scales every trial budget in a figure preset.
void apply_trials(Json& j, std::uint64_t trials) {
    if (j.contains("trials")) j["trials"] = trials;
    if (j.contains("mc_trials")) j["mc_trials"] = std::max<std::uint64_t>(trials, 100);
    if (j.contains("cdf"))
        for (Json& c : j["cdf"]) c["trials"] = std::max<std::uint64_t>(trials, 100);
}

CommandOutput dispatch(const std::string& command, const Json& j, Execution exec) {
    if (command == "outage") return run_outage(parse_outage_config(j), exec);
    if (command == "asymptotic") return run_asymptotic(parse_asymptotic_config(j), exec);
    if (command == "dmt") return run_dmt(parse_dmt_config(j));
    if (command == "slope") return run_slope(parse_slope_config(j));
    if (command == "validate") return run_validate(parse_validate_config(j), exec);
    throw InvalidArgument("unknown command '" + command + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"linmimo: outage, large-system moments and DMT of MIMO linear receivers"};
    app.set_version_flag("--version", LINMIMO_VERSION);
    app.require_subcommand(1);

    CommonOptions o;
    auto* outage = app.add_subcommand("outage", "Monte Carlo outage sweep");
    add_common(outage, o, true);
    auto* asym = app.add_subcommand("asymptotic", "large-system mean/variance and Gaussian CDF");
    add_common(asym, o, true);
    auto* dmt = app.add_subcommand("dmt", "DMT curves and finite-rate diversity predictions");
    add_common(dmt, o, true);

    auto* slope = app.add_subcommand("slope", "fit -log10 p against log10 rho over a window");
    add_common(slope, o, false);
    std::string curve;
    std::vector<double> window;
    std::uint64_t min_events = 1;
    slope->add_option("--curve", curve, "CSV with snr_db and p_hat columns")->check(CLI::ExistingFile);
    slope->add_option("--window", window, "lo hi, in dB")->expected(2);
    slope->add_option("--min-events", min_events, "minimum events for a point to count");

    auto* validate = app.add_subcommand("validate", "run invariant suites and emit a JSON report");
    add_common(validate, o, false);
    std::vector<std::string> suites;
    std::optional<std::uint64_t> validate_trials;
    validate->add_option("--suite", suites, "novikov, trace_variance, cumulant_decay, gamma_marginal, fixed_points, all");
    validate->add_option("--trials", validate_trials, "Monte Carlo budget per suite");

    auto* figure = app.add_subcommand("reproduce-figure", "run a built-in figure preset");
    add_common(figure, o, false);
    int figure_id = 0;
    std::optional<std::uint64_t> figure_trials;
    figure->add_option("figure", figure_id, "figure number, 2..8")->required();
    figure->add_option("--trials", figure_trials, "override every trial budget in the preset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    const auto start = std::chrono::steady_clock::now();
    const Execution exec{o.workers};
    std::string command;
    Json config;
    try {
        if (*figure) {
            config = figure_config(figure_id);
            command = config.at("command").get<std::string>();
            if (figure_trials) apply_trials(config, *figure_trials);
        } else {
            command = app.get_subcommands().front()->get_name();
            if (!o.config.empty()) {
                config = load_json_file(o.config);
            } else if (command == "slope") {
                if (curve.empty() || window.size() != 2)
                    throw ConfigError("slope", "give --config, or --curve and --window lo hi");
                config = {{"curve", curve}, {"window_db", window}, {"min_events", min_events}};
            } else if (command == "validate") {
                if (suites.empty()) throw ConfigError("validate", "give --config or --suite");
                config = {{"suite", suites}};
                if (validate_trials) config["trials"] = *validate_trials;
            }
        }
        apply_seed(config, o.seed);
        const CommandOutput result = dispatch(command, config, exec);
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return emit(result, command, config, o, wall, out, err);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error (" << error_name(e) << "): " << e.what() << "\n";
        return 2;
    }
}

}  // namespace linmimo::cli
