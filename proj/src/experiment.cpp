// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "risvlc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace risvlc {

std::string_view scheme_name(SchemeId id) {
    switch (id) {
        case SchemeId::Centralized: return "centralized";
        case SchemeId::Distributed: return "distributed";
        case SchemeId::Adt: return "adt";
        case SchemeId::Ris: return "ris";
    }
    return "unknown";
}

std::optional<SchemeId> scheme_from_name(std::string_view name) {
    for (SchemeId id : kAllSchemes)
        if (scheme_name(id) == name) return id;
    return std::nullopt;
}

namespace {

template <typename Fn>
void check(const std::string& path, Fn&& fn) {
    try {
        fn();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path, e.what());
    } catch (const std::domain_error& e) {
        throw ConfigError(path, e.what());
    }
}

}  // namespace

void validate(const Scenario& s) {
    const std::pair<const char*, double> dims[] = {
        {"room.length_m", s.room.length_m}, {"room.width_m", s.room.width_m}, {"room.height_m", s.room.height_m}};
    for (const auto& [path, v] : dims)
        if (!(v > 0.0 && std::isfinite(v))) throw ConfigError(path, "must be a positive finite length");
    check("room", [&] { validate(s.room); });
    check("grid", [&] { validate(s.grid, s.room); });
    if (s.schemes.empty()) throw ConfigError("schemes", "at least one scheme is required");
    if (std::set<SchemeId>(s.schemes.begin(), s.schemes.end()).size() != s.schemes.size())
        throw ConfigError("schemes", "schemes must be distinct");
    if (s.baseline && std::find(s.schemes.begin(), s.schemes.end(), *s.baseline) == s.schemes.end())
        throw ConfigError("baseline", "baseline must be one of the configured schemes");
    if (!(s.total_power_w > 0.0)) throw ConfigError("total_power_w", "total power must be > 0");
    check("semi_angle_deg", [&] { (void)lambertian_order(s.semi_angle_deg); });
    if (!(s.tau_deg > 0.0 && s.tau_deg < 90.0)) throw ConfigError("adt.tau_deg", "tau must lie in (0, 90) degrees");
    if (s.array_count < 1) throw ConfigError("array_count", "array count must be >= 1");
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(s.array_count))));
    if (side * side != s.array_count) throw ConfigError("array_count", "array count must be a perfect square");
    check("ris", [&] { validate(s.ris); });
    check("concentrator", [&] { validate(s.optics.concentrator); });
    check("receiver", [&] { validate(s.optics.receiver); });
    check("photometry", [&] { validate(s.optics.photometry); });
    check("zones", [&] { validate(s.zones); });
}

LayoutScheme layout_for(SchemeId id, const Scenario& s) {
    LayoutScheme scheme;
    scheme.array_count = s.array_count;
    switch (id) {
        case SchemeId::Centralized: scheme.kind = layout::Centralized{}; break;
        case SchemeId::Distributed: scheme.kind = layout::Distributed{}; break;
        case SchemeId::Adt: scheme.kind = layout::Adt{s.tau_deg}; break;
        case SchemeId::Ris: scheme = ris_layout(s.ris); break;
    }
    return scheme;
}

FieldScene make_field_scene(SchemeId id, const Scenario& s) {
    FieldScene scene;
    scene.room = s.room;
    scene.grid = s.grid;
    scene.emitters = build_layout(layout_for(id, s), s.room, s.total_power_w, s.semi_angle_deg);
    if (id == SchemeId::Ris) scene.ris = s.ris;
    scene.label = std::string(scheme_name(id));
    return scene;
}

GainRow scheme_gains(const SchemeResult& candidate, const SchemeResult& baseline) {
    GainRow g;
    g.scheme = candidate.id;
    const auto& ci = candidate.illuminance_stats;
    const auto& bi = baseline.illuminance_stats;
    const auto& cr = candidate.rate_stats;
    const auto& br = baseline.rate_stats;
    g.min_illuminance_pct = gain_percent(ci.min, bi.min);
    g.avg_illuminance_pct = gain_percent(ci.avg, bi.avg);
    g.max_illuminance_pct = gain_percent(ci.max, bi.max);
    g.min_rate_pct = gain_percent(cr.min, br.min);
    g.avg_rate_pct = gain_percent(cr.avg, br.avg);
    g.max_rate_pct = gain_percent(cr.max, br.max);
    return g;
}

const SchemeResult& ComparisonReport::result(SchemeId id) const {
    for (const auto& r : schemes)
        if (r.id == id) return r;
    throw std::out_of_range("scheme not in report: " + std::string(scheme_name(id)));
}

SchemeResult run_scheme(SchemeId id, const Scenario& s, unsigned threads) {
    const FieldScene scene = make_field_scene(id, s);
    SchemeResult r;
    r.id = id;
    r.illuminance = compute_field(scene, Quantity::Illuminance, s.optics, threads);
    r.rate = compute_field(scene, Quantity::DataRate, s.optics, threads);
    r.illuminance_stats = uniformity(r.illuminance);
    r.rate_stats = uniformity(r.rate);
    r.compliance = classify_compliance(r.illuminance, s.zones);
    return r;
}

ComparisonReport run_scenario(const Scenario& s, unsigned threads) {
    validate(s);
    ComparisonReport report;
    report.baseline = s.baseline_scheme();
    report.schemes.reserve(s.schemes.size());
    for (SchemeId id : s.schemes) report.schemes.push_back(run_scheme(id, s, threads));
    const SchemeResult& base = report.result(report.baseline);
    for (const auto& r : report.schemes) {
        if (r.id == report.baseline) continue;
        // Gains are undefined against an all-dark baseline.
        if (base.illuminance_stats.min > 0.0 && base.rate_stats.min > 0.0) report.gains.push_back(scheme_gains(r, base));
    }
    return report;
}

void validate(const SweepSpec& sweep) {
    if (sweep.parameter != "power_w") throw ConfigError("sweep.parameter", "only power_w can be swept");
    if (!(sweep.step > 0.0)) throw ConfigError("sweep.step", "step must be > 0");
    if (!(sweep.start <= sweep.stop)) throw ConfigError("sweep.start", "start must not exceed stop");
    if (!(sweep.start > 0.0)) throw ConfigError("sweep.start", "swept power must be > 0");
}

std::vector<double> sweep_values(const SweepSpec& sweep) {
    validate(sweep);
    std::vector<double> out;
    const double slack = 1e-9 * sweep.step;
    for (long k = 0;; ++k) {
        const double v = sweep.start + static_cast<double>(k) * sweep.step;
        if (v > sweep.stop + slack) break;
        out.push_back(v);
    }
    return out;
}

SweepTable power_sweep(const Scenario& s, const SweepSpec& sweep, unsigned threads) {
    validate(s);
    SweepTable table;
    table.schemes = s.schemes;
    for (double p : sweep_values(sweep)) {
        Scenario at = s;
        at.total_power_w = p;
        SweepRow row;
        row.power_w = p;
        for (SchemeId id : s.schemes) {
            const FieldScene scene = make_field_scene(id, at);
            row.min_rate_bps.push_back(compute_field(scene, Quantity::DataRate, at.optics, threads).values.minCoeff());
            row.min_illuminance_lux.push_back(
                compute_field(scene, Quantity::Illuminance, at.optics, threads).values.minCoeff());
        }
        table.rows.push_back(std::move(row));
    }

    const auto adt = std::find(s.schemes.begin(), s.schemes.end(), SchemeId::Adt);
    const auto ris = std::find(s.schemes.begin(), s.schemes.end(), SchemeId::Ris);
    if (adt != s.schemes.end() && ris != s.schemes.end()) {
        const auto ai = static_cast<std::size_t>(adt - s.schemes.begin());
        const auto ri = static_cast<std::size_t>(ris - s.schemes.begin());
        for (const auto& row : table.rows) {
            if (row.min_rate_bps[ai] >= row.min_rate_bps[ri]) {
                table.adt_overtakes_ris_w = row.power_w;
                break;
            }
        }
    }
    return table;
}

CalibrationGrid CalibrationGrid::standard() {
    CalibrationGrid g;
    for (double a = 40.0; a <= 84.0 + 1e-9; a += 2.0) g.semi_angles_deg.push_back(a);
    g.noise_psds_a2_per_hz = {5e-23, 1e-22, 1.5e-22, 2.2e-22, 3e-22, 5e-22, 1e-21, 3e-21};
    g.amplification_targets = {10.0, 15.0, 20.0, 25.0, 30.0};
    return g;
}

namespace {

// Strictly below, by more than rounding noise between two equal ratios.
bool clearly_below(double a, double b) { return a < b - 1e-12 * std::max(std::abs(a), std::abs(b)); }

bool ordering_holds(const std::array<UniformityPair, 4>& u, bool require_ris_illuminance) {
    const auto& cen = u[0];
    const auto& dis = u[1];
    const auto& adt = u[2];
    const auto& ris = u[3];
    const bool illum = clearly_below(cen.illuminance, dis.illuminance) &&
                       (!require_ris_illuminance || clearly_below(cen.illuminance, ris.illuminance)) &&
                       clearly_below(cen.illuminance, adt.illuminance) && cen.illuminance < 0.40;
    const bool rate = ris.rate >= 0.7 && cen.rate < 0.5 && dis.rate < 0.5 && adt.rate < 0.5;
    return illum && rate;
}

}  // namespace

std::vector<CalibrationCandidate> calibrate(const Scenario& base, const CalibrationGrid& grid, unsigned threads) {
    validate(base);
    std::vector<CalibrationCandidate> out;
    const std::vector<Vec3> points = grid_points(base.room, base.grid);

    for (double semi : grid.semi_angles_deg) {
        Scenario s = base;
        s.semi_angle_deg = semi;
        s.ris.gamma_per_m = 0.0;  // unit amplification; targets are applied below

        std::array<double, 4> illum_u{};
        std::array<double, 4> illum_min{};
        std::array<Eigen::ArrayXd, 4> power{};
        for (std::size_t k = 0; k < kAllSchemes.size(); ++k) {
            const FieldScene scene = make_field_scene(kAllSchemes[k], s);
            const FieldMap illum = compute_field(scene, Quantity::Illuminance, s.optics, threads);
            const UniformityReport st = uniformity(illum);
            illum_u[k] = st.uniformity;
            illum_min[k] = st.min;
            power[k].resize(static_cast<Eigen::Index>(points.size()));
            for (std::size_t c = 0; c < points.size(); ++c)
                power[k][static_cast<Eigen::Index>(c)] =
                    received_power_at(scene.emitters, scene.ris, s.optics.receiver, points[c]);
        }

        for (double n0 : grid.noise_psds_a2_per_hz) {
            ReceiverModel rx = s.optics.receiver;
            rx.noise_psd_a2_per_hz = n0;
            auto rate_stats = [&](const Eigen::ArrayXd& p, double scale) {
                FieldMap m;
                m.nx = s.grid.nx;
                m.ny = s.grid.ny;
                m.values = p.unaryExpr([&](double w) { return rate_from_power(scale * w, rx, s.optics.rate_model); });
                return uniformity(m);
            };
            std::array<UniformityReport, 3> plain{};
            for (std::size_t k = 0; k < 3; ++k) plain[k] = rate_stats(power[k], 1.0);

            for (double amp : grid.amplification_targets) {
                const UniformityReport ris = rate_stats(power[3], amp);
                CalibrationCandidate c;
                c.semi_angle_deg = semi;
                c.noise_psd_a2_per_hz = n0;
                c.gamma_per_m = std::log(amp) / s.ris.thickness_m;
                for (std::size_t k = 0; k < 4; ++k) {
                    c.uniformity[k].illuminance = illum_u[k];
                    c.uniformity[k].rate = k < 3 ? plain[k].uniformity : ris.uniformity;
                    c.max_abs_error = std::max({c.max_abs_error,
                                                std::abs(c.uniformity[k].illuminance - kReferenceUniformity[k].illuminance),
                                                std::abs(c.uniformity[k].rate - kReferenceUniformity[k].rate)});
                }
                c.min_illuminance_gain_pct = illum_min[0] > 0.0 ? gain_percent(amp * illum_min[3], illum_min[0]) : 0.0;
                c.min_rate_gain_pct = plain[0].min > 0.0 ? gain_percent(ris.min, plain[0].min) : 0.0;
                c.ordering_holds = ordering_holds(c.uniformity, true);
                c.ordering_holds_except_ris_illuminance = ordering_holds(c.uniformity, false);
                c.gain_in_window = c.min_illuminance_gain_pct >= 1000.0 && c.min_illuminance_gain_pct <= 3000.0;
                out.push_back(c);
            }
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.max_abs_error < b.max_abs_error; });
    return out;
}

}  // namespace risvlc
