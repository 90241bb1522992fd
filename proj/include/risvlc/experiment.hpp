// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "risvlc/metrics.hpp"
#include "risvlc/optics.hpp"
#include "risvlc/scene.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace risvlc {

/// Invalid scenario input; `path` names the offending field ("room.height_m").
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& what)
        : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

enum class SchemeId { Centralized, Distributed, Adt, Ris };

inline constexpr std::array kAllSchemes{SchemeId::Centralized, SchemeId::Distributed, SchemeId::Adt, SchemeId::Ris};

std::string_view scheme_name(SchemeId id);
std::optional<SchemeId> scheme_from_name(std::string_view name);

struct OutputOptions {
    bool heatmaps = true;

    bool operator==(const OutputOptions&) const = default;
};

/// One simulation setup. Defaults reproduce the reference room: 5 x 5 x 3 m,
/// 100 x 100 grid at 0.85 m, 1 W, tau = 45 deg, d = 0.75 mm, v_th = 1.34 V,
/// v_e = 2.1 V, n_c = 1.55, 200 MHz, 510 nm.
struct Scenario {
    Room room;
    GridSpec grid;
    std::vector<SchemeId> schemes{kAllSchemes.begin(), kAllSchemes.end()};
    /// Reference for gain tables; unset means the first listed scheme.
    std::optional<SchemeId> baseline;
    double total_power_w = 1.0;
    /// LED semi-angle at half power, calibrated (see README).
    double semi_angle_deg = 68.0;
    double tau_deg = 45.0;
    int array_count = 4;
    LcRisConfig ris;
    OpticsConfig optics;
    ZoneSpec zones;
    OutputOptions output;

    SchemeId baseline_scheme() const { return baseline ? *baseline : schemes.front(); }

    bool operator==(const Scenario&) const = default;
};

/// Throws ConfigError naming the first invalid field.
void validate(const Scenario& s);

LayoutScheme layout_for(SchemeId id, const Scenario& s);

/// Emitters and RIS slab for one scheme of the scenario.
FieldScene make_field_scene(SchemeId id, const Scenario& s);

struct SchemeResult {
    SchemeId id = SchemeId::Centralized;
    FieldMap illuminance;
    FieldMap rate;
    UniformityReport illuminance_stats;
    UniformityReport rate_stats;
    ComplianceReport compliance;
};

/// Percent gains of one scheme over the baseline.
struct GainRow {
    SchemeId scheme = SchemeId::Centralized;
    double min_illuminance_pct = 0.0;
    double avg_illuminance_pct = 0.0;
    double max_illuminance_pct = 0.0;
    double min_rate_pct = 0.0;
    double avg_rate_pct = 0.0;
    double max_rate_pct = 0.0;
};

GainRow scheme_gains(const SchemeResult& candidate, const SchemeResult& baseline);

struct ComparisonReport {
    std::vector<SchemeResult> schemes;
    SchemeId baseline = SchemeId::Centralized;
    /// One row per non-baseline scheme, in scheme order.
    std::vector<GainRow> gains;

    const SchemeResult& result(SchemeId id) const;
};

SchemeResult run_scheme(SchemeId id, const Scenario& s, unsigned threads = 1);

ComparisonReport run_scenario(const Scenario& s, unsigned threads = 1);

struct SweepSpec {
    std::string parameter = "power_w";
    double start = 0.5;
    double stop = 8.0;
    double step = 0.5;
};

void validate(const SweepSpec& sweep);

/// start, start + step, ... up to stop (inclusive within rounding).
std::vector<double> sweep_values(const SweepSpec& sweep);

struct SweepRow {
    double power_w = 0.0;
    /// Indexed like SweepTable::schemes.
    std::vector<double> min_rate_bps;
    std::vector<double> min_illuminance_lux;
};

struct SweepTable {
    std::vector<SchemeId> schemes;
    std::vector<SweepRow> rows;
    /// First swept power at which ADT's minimum rate reaches the RIS scheme's,
    /// when both are present. Reported only.
    std::optional<double> adt_overtakes_ris_w;
};

SweepTable power_sweep(const Scenario& s, const SweepSpec& sweep, unsigned threads = 1);

/// Illuminance and rate uniformity for one scheme.
struct UniformityPair {
    double illuminance = 0.0;
    double rate = 0.0;
};

/// Reference uniformities the calibration sweep aims at, in kAllSchemes order.
inline constexpr std::array<UniformityPair, 4> kReferenceUniformity{{
    {0.2371, 0.3535},
    {0.4378, 0.3937},
    {0.4755, 0.4379},
    {0.4628, 0.8168},
}};

struct CalibrationGrid {
    std::vector<double> semi_angles_deg;
    std::vector<double> noise_psds_a2_per_hz;
    /// Target exp(gamma d) values; converted to gamma with the scenario's thickness.
    std::vector<double> amplification_targets;

    static CalibrationGrid standard();
};

struct CalibrationCandidate {
    double semi_angle_deg = 0.0;
    double noise_psd_a2_per_hz = 0.0;
    double gamma_per_m = 0.0;
    /// kAllSchemes order.
    std::array<UniformityPair, 4> uniformity{};
    /// Largest absolute deviation from kReferenceUniformity.
    double max_abs_error = 0.0;
    double min_illuminance_gain_pct = 0.0;
    double min_rate_gain_pct = 0.0;
    /// Uniformities rank the schemes in the reference order, with the RIS rate
    /// map above 0.7 and the plain rate maps below 0.5.
    bool ordering_holds = false;
    /// Same, without the strict centralized < RIS illumination clause (the
    /// RIS illuminance map is a constant multiple of the centralized one).
    bool ordering_holds_except_ris_illuminance = false;
    bool gain_in_window = false;
};

/// Grid search over semi-angle, noise PSD, and RIS amplification using the
/// scenario's geometry and all four schemes. Sorted by max_abs_error.
std::vector<CalibrationCandidate> calibrate(const Scenario& base, const CalibrationGrid& grid, unsigned threads = 1);

}  // namespace risvlc
