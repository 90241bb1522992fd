// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "risvlc/config.hpp"
#include "risvlc/experiment.hpp"
#include "risvlc/metrics.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace risvlc {

/// CSV text: header `x_m,y_m,value,unit`, one row per cell in index order,
/// coordinates with %.9g and values with 9 significant digits (%#.9g), LF.
std::string field_csv(const FieldMap& map);
void write_field_csv(const FieldMap& map, const std::filesystem::path& path);

using Rgb = std::array<std::uint8_t, 3>;

/// Color for t in [0, 1] on a viridis-like ramp whose luminance rises
/// monotonically from t = 0 to t = 1.
Rgb ramp_color(double t);

/// Binary PPM (P6), nx x ny pixels. Image row r shows grid row ny - 1 - r so
/// +y points up. A constant map renders entirely in the darkest color.
std::string heatmap_ppm(const FieldMap& map);
void render_heatmap(const FieldMap& map, const std::filesystem::path& path);

nlohmann::json report_to_json(const ComparisonReport& report);
nlohmann::json sweep_to_json(const SweepTable& table);

void write_report(const ComparisonReport& report, const std::filesystem::path& path);
void write_report(const SweepTable& table, const std::filesystem::path& path);

/// `power_w,<scheme>_min_rate_bps...,<scheme>_min_illuminance_lux...`
std::string sweep_csv(const SweepTable& table);

/// Writes `bytes` to `path`, raising IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace risvlc
