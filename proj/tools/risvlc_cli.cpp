// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end for the indoor VLC coverage simulator.
//
//   risvlc simulate  --config FILE --out DIR [--quantity illuminance|rate]
//   risvlc compare   --config FILE --schemes LIST --baseline NAME --out DIR
//   risvlc sweep     --config FILE --param power_w --from A --to B --step S --out DIR
//   risvlc validate  --config FILE
//   risvlc calibrate --config FILE [--top N]
//
// Exit codes: 0 success, 2 invalid invocation or config, 3 I/O failure.

#include "risvlc/config.hpp"
#include "risvlc/experiment.hpp"
#include "risvlc/output.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace risvlc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

unsigned threads_from_env() {
    const char* raw = std::getenv("RIS_VLC_THREADS");
    if (!raw || !*raw) return 0;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 0) throw ConfigError("RIS_VLC_THREADS", "expected a non-negative integer");
    return static_cast<unsigned>(v);
}

void ensure_dir(const fs::path& dir) {
    if (dir.empty()) throw IoError("output directory is empty");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory: " + dir.string());
}

void emit_maps(const ComparisonReport& report, const Scenario& s, const fs::path& out,
               const std::vector<Quantity>& quantities) {
    for (const auto& r : report.schemes) {
        for (Quantity q : quantities) {
            const FieldMap& map = q == Quantity::Illuminance ? r.illuminance : r.rate;
            const std::string stem = std::string(scheme_name(r.id)) + "_" + std::string(quantity_name(q));
            write_field_csv(map, out / (stem + ".csv"));
            if (s.output.heatmaps) render_heatmap(map, out / (stem + ".ppm"));
        }
    }
}

void print_summary(const ComparisonReport& report) {
    std::printf("%-12s %12s %12s %10s %14s %14s %10s\n", "scheme", "min_lux", "max_lux", "U_lux", "min_rate_bps",
                "max_rate_bps", "U_rate");
    for (const auto& r : report.schemes) {
        std::printf("%-12s %12.4f %12.4f %10.4f %14.6g %14.6g %10.4f\n", std::string(scheme_name(r.id)).c_str(),
                    r.illuminance_stats.min, r.illuminance_stats.max, r.illuminance_stats.uniformity, r.rate_stats.min,
                    r.rate_stats.max, r.rate_stats.uniformity);
    }
}

std::vector<SchemeId> parse_scheme_list(const std::string& list) {
    std::vector<SchemeId> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto id = scheme_from_name(item);
        if (!id) throw ConfigError("--schemes", "unknown scheme '" + item + "'");
        out.push_back(*id);
    }
    if (out.empty()) throw ConfigError("--schemes", "empty scheme list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Indoor VLC coverage simulator: LED array layouts and LC-RIS transmitters"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;

    auto* simulate = app.add_subcommand("simulate", "Run every scheme in the config and write maps and report");
    std::string quantity_opt;
    simulate->add_option("--config", config_path, "Scenario JSON file")->required();
    simulate->add_option("--out", out_dir, "Output directory")->required();
    simulate->add_option("--quantity", quantity_opt, "Only write maps for this quantity")
        ->check(CLI::IsMember({"illuminance", "rate"}));

    auto* compare = app.add_subcommand("compare", "Run a chosen set of schemes against a baseline");
    std::string scheme_list;
    std::string baseline_name;
    compare->add_option("--config", config_path, "Scenario JSON file")->required();
    compare->add_option("--schemes", scheme_list, "Comma-separated schemes (centralized,distributed,adt,ris)")
        ->required();
    compare->add_option("--baseline", baseline_name, "Baseline scheme for gain tables")->required();
    compare->add_option("--out", out_dir, "Output directory")->required();

    auto* sweep = app.add_subcommand("sweep", "Sweep total transmit power and record per-scheme minima");
    SweepSpec spec;
    sweep->add_option("--config", config_path, "Scenario JSON file")->required();
    sweep->add_option("--param", spec.parameter, "Swept parameter")->check(CLI::IsMember({"power_w"}));
    sweep->add_option("--from", spec.start, "First value")->required();
    sweep->add_option("--to", spec.stop, "Last value")->required();
    sweep->add_option("--step", spec.step, "Increment")->required();
    sweep->add_option("--out", out_dir, "Output directory")->required();

    auto* validate_cmd = app.add_subcommand("validate", "Check a config file and exit");
    validate_cmd->add_option("--config", config_path, "Scenario JSON file")->required();

    auto* calibrate_cmd = app.add_subcommand("calibrate", "Grid-search receiver and RIS parameters against reference uniformities");
    std::size_t top = 10;
    calibrate_cmd->add_option("--config", config_path, "Scenario JSON file")->required();
    calibrate_cmd->add_option("--top", top, "Number of candidates to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        const unsigned threads = threads_from_env();
        Scenario scenario = parse_config(config_path);

        if (validate_cmd->parsed()) {
            std::printf("ok: %zu scheme(s), %dx%d grid\n", scenario.schemes.size(), scenario.grid.nx,
                        scenario.grid.ny);
            return kExitOk;
        }

        if (calibrate_cmd->parsed()) {
            const auto candidates = calibrate(scenario, CalibrationGrid::standard(), threads);
            std::printf("%8s %10s %12s %8s  %s\n", "semi", "N0", "gamma", "maxerr", "U_lux/U_rate cen dis adt ris");
            for (std::size_t k = 0; k < std::min(top, candidates.size()); ++k) {
                const auto& c = candidates[k];
                std::printf("%8.2f %10.3g %12.6g %8.4f ", c.semi_angle_deg, c.noise_psd_a2_per_hz, c.gamma_per_m,
                            c.max_abs_error);
                for (const auto& u : c.uniformity) std::printf(" %.4f/%.4f", u.illuminance, u.rate);
                std::printf("  order=%d order_ex_ris_lux=%d gain=%.0f%%\n", c.ordering_holds ? 1 : 0,
                            c.ordering_holds_except_ris_illuminance ? 1 : 0, c.min_illuminance_gain_pct);
            }
            return kExitOk;
        }

        const fs::path out(out_dir);
        if (sweep->parsed()) {
            validate(spec);
            const SweepTable table = power_sweep(scenario, spec, threads);
            ensure_dir(out);
            write_report(table, out / "report.json");
            write_file(out / "sweep.csv", sweep_csv(table));
            std::printf("%zu sweep rows written to %s\n", table.rows.size(), out.string().c_str());
            return kExitOk;
        }

        std::vector<Quantity> quantities{Quantity::Illuminance, Quantity::DataRate};
        if (compare->parsed()) {
            scenario.schemes = parse_scheme_list(scheme_list);
            const auto base = scheme_from_name(baseline_name);
            if (!base) throw ConfigError("--baseline", "unknown scheme '" + baseline_name + "'");
            scenario.baseline = *base;
        } else if (quantity_opt == "illuminance") {
            quantities = {Quantity::Illuminance};
        } else if (quantity_opt == "rate") {
            quantities = {Quantity::DataRate};
        }

        const ComparisonReport report = run_scenario(scenario, threads);
        ensure_dir(out);
        emit_maps(report, scenario, out, quantities);
        write_report(report, out / "report.json");
        print_summary(report);
        return kExitOk;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
