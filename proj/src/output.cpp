// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "risvlc/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace risvlc {

using nlohmann::json;

namespace {

std::string format(const char* fmt, double v) {
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, fmt, v);
    return std::string(buf, static_cast<std::size_t>(std::max(n, 0)));
}

}  // namespace

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    if (path.empty()) throw IoError("output path is empty");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("failed writing: " + path.string());
}

std::string field_csv(const FieldMap& map) {
    validate(map);
    std::string out = "x_m,y_m,value,unit\n";
    out.reserve(out.size() + map.size() * 40);
    for (int j = 0; j < map.ny; ++j) {
        for (int i = 0; i < map.nx; ++i) {
            out += format("%.9g", map.x_m(i));
            out += ',';
            out += format("%.9g", map.y_m(j));
            out += ',';
            out += format("%#.9g", map.at(i, j));
            out += ',';
            out += map.units;
            out += '\n';
        }
    }
    return out;
}

void write_field_csv(const FieldMap& map, const std::filesystem::path& path) {
    if (path.empty()) throw IoError("output path is empty");
    write_file(path, field_csv(map));
}

Rgb ramp_color(double t) {
    // Viridis sampled at nine evenly spaced stops.
    static constexpr std::array<std::array<double, 3>, 9> stops{{
        {68, 1, 84},
        {71, 44, 122},
        {59, 81, 139},
        {44, 113, 142},
        {33, 144, 141},
        {39, 173, 129},
        {92, 200, 99},
        {170, 220, 50},
        {253, 231, 37},
    }};
    t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0);
    const double pos = t * (stops.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, stops.size() - 1);
    const double w = pos - static_cast<double>(lo);
    Rgb c{};
    for (std::size_t k = 0; k < 3; ++k)
        c[k] = static_cast<std::uint8_t>(std::lround(stops[lo][k] + w * (stops[hi][k] - stops[lo][k])));
    return c;
}

std::string heatmap_ppm(const FieldMap& map) {
    validate(map);
    const double lo = map.values.minCoeff();
    const double hi = map.values.maxCoeff();
    const double span = hi - lo;
    std::string out = "P6\n" + std::to_string(map.nx) + " " + std::to_string(map.ny) + "\n255\n";
    out.reserve(out.size() + map.size() * 3);
    for (int row = 0; row < map.ny; ++row) {
        const int j = map.ny - 1 - row;
        for (int i = 0; i < map.nx; ++i) {
            const double t = span > 0.0 ? (map.at(i, j) - lo) / span : 0.0;
            for (std::uint8_t b : ramp_color(t)) out += static_cast<char>(b);
        }
    }
    return out;
}

void render_heatmap(const FieldMap& map, const std::filesystem::path& path) {
    if (path.empty()) throw IoError("output path is empty");
    write_file(path, heatmap_ppm(map));
}

namespace {

json stats_json(const UniformityReport& u, std::string_view unit) {
    return {{"min", u.min}, {"max", u.max}, {"avg", u.avg}, {"uniformity", u.uniformity}, {"unit", unit}};
}

json zone_json(const ZoneVerdict& z) {
    return {{"cells", z.cells},
            {"min_lux", z.min_lux ? json(*z.min_lux) : json(nullptr)},
            {"threshold_lux", z.threshold_lux},
            {"pass", z.pass}};
}

json compliance_json(const ComplianceReport& c) {
    return {{"task", zone_json(c.task)},
            {"immediate_surrounding", zone_json(c.surround)},
            {"background", zone_json(c.background)},
            {"area_threshold_lux", c.area_threshold_lux},
            {"fraction_above_threshold", c.fraction_above_threshold},
            {"all_pass", c.all_pass()}};
}

}  // namespace

json report_to_json(const ComparisonReport& report) {
    json schemes = json::array();
    json table = json::array();
    for (const auto& r : report.schemes) {
        schemes.push_back({{"name", scheme_name(r.id)},
                           {"grid", {{"nx", r.illuminance.nx}, {"ny", r.illuminance.ny}}},
                           {"illuminance", stats_json(r.illuminance_stats, "lux")},
                           {"rate", stats_json(r.rate_stats, "bit/s")},
                           {"compliance", compliance_json(r.compliance)}});
        table.push_back({{"scheme", scheme_name(r.id)},
                         {"illuminance_uniformity", r.illuminance_stats.uniformity},
                         {"rate_uniformity", r.rate_stats.uniformity}});
    }
    json gains = json::array();
    for (const auto& g : report.gains) {
        gains.push_back({{"scheme", scheme_name(g.scheme)},
                         {"baseline", scheme_name(report.baseline)},
                         {"min_illuminance_pct", g.min_illuminance_pct},
                         {"avg_illuminance_pct", g.avg_illuminance_pct},
                         {"max_illuminance_pct", g.max_illuminance_pct},
                         {"min_rate_pct", g.min_rate_pct},
                         {"avg_rate_pct", g.avg_rate_pct},
                         {"max_rate_pct", g.max_rate_pct}});
    }
    return {{"kind", "comparison"},
            {"baseline", scheme_name(report.baseline)},
            {"schemes", schemes},
            {"gains", gains},
            {"uniformity_table", table}};
}

json sweep_to_json(const SweepTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json rate = json::object();
        json lux = json::object();
        for (std::size_t k = 0; k < table.schemes.size(); ++k) {
            rate[std::string(scheme_name(table.schemes[k]))] = row.min_rate_bps[k];
            lux[std::string(scheme_name(table.schemes[k]))] = row.min_illuminance_lux[k];
        }
        rows.push_back({{"power_w", row.power_w}, {"min_rate_bps", rate}, {"min_illuminance_lux", lux}});
    }
    json schemes = json::array();
    for (SchemeId id : table.schemes) schemes.push_back(scheme_name(id));
    return {{"kind", "power_sweep"},
            {"parameter", "power_w"},
            {"schemes", schemes},
            {"rows", rows},
            {"adt_overtakes_ris_w", table.adt_overtakes_ris_w ? json(*table.adt_overtakes_ris_w) : json(nullptr)}};
}

void write_report(const ComparisonReport& report, const std::filesystem::path& path) {
    write_file(path, report_to_json(report).dump(2) + "\n");
}

void write_report(const SweepTable& table, const std::filesystem::path& path) {
    write_file(path, sweep_to_json(table).dump(2) + "\n");
}

std::string sweep_csv(const SweepTable& table) {
    std::string out = "power_w";
    for (SchemeId id : table.schemes) out += "," + std::string(scheme_name(id)) + "_min_rate_bps";
    for (SchemeId id : table.schemes) out += "," + std::string(scheme_name(id)) + "_min_illuminance_lux";
    out += '\n';
    for (const auto& row : table.rows) {
        out += format("%.9g", row.power_w);
        for (double v : row.min_rate_bps) out += "," + format("%#.9g", v);
        for (double v : row.min_illuminance_lux) out += "," + format("%#.9g", v);
        out += '\n';
    }
    return out;
}

}  // namespace risvlc
