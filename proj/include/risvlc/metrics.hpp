// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "risvlc/optics.hpp"
#include "risvlc/scene.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace risvlc {

enum class Quantity { Illuminance, DataRate };

std::string_view quantity_name(Quantity q);  // "illuminance" / "rate"
std::string_view quantity_units(Quantity q);  // "lux" / "bit/s"

enum class RateModel {
    /// B log2(1 + SNR)
    Shannon,
    /// B log2(1 + e / (2 pi) SNR), the IM/DD peak-power lower bound.
    LowerBound,
};

/// Scalar samples over the receiver-plane grid. Cell (i, j) lives at index
/// j * nx + i and is centered at ((i + 0.5) cell_x, (j + 0.5) cell_y).
struct FieldMap {
    int nx = 0;
    int ny = 0;
    Eigen::ArrayXd values;
    Quantity quantity = Quantity::Illuminance;
    std::string scheme;
    std::string units;
    double cell_x_m = 0.0;
    double cell_y_m = 0.0;

    std::size_t size() const { return static_cast<std::size_t>(values.size()); }
    double& at(int i, int j) { return values[static_cast<Eigen::Index>(j) * nx + i]; }
    double at(int i, int j) const { return values[static_cast<Eigen::Index>(j) * nx + i]; }
    double x_m(int i) const { return (i + 0.5) * cell_x_m; }
    double y_m(int j) const { return (j + 0.5) * cell_y_m; }

    /// Row-major ny x nx view (row = j).
    auto grid() const {
        return Eigen::Map<const Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(values.data(), ny,
                                                                                                       nx);
    }
};

/// Rejects a length mismatch or any negative or non-finite sample.
void validate(const FieldMap& map);

/// Transmitter optics shared by every scheme in a run.
struct OpticsConfig {
    ConcentratorConfig concentrator;
    ReceiverModel receiver;
    Photometry photometry;
    RateModel rate_model = RateModel::Shannon;

    bool operator==(const OpticsConfig&) const = default;
};

/// Everything needed to evaluate one scheme over the grid. `ris` is set only
/// for RIS-fronted transmitters.
struct FieldScene {
    Room room;
    GridSpec grid;
    std::vector<Emitter> emitters;
    std::optional<LcRisConfig> ris;
    std::string label;
};

double illuminance_at(std::span<const Emitter> emitters, const std::optional<LcRisConfig>& ris,
                      const Photometry& photometry, const ConcentratorConfig& concentrator, const Vec3& point);

/// Optical power collected by the detector at `point`.
double received_power_at(std::span<const Emitter> emitters, const std::optional<LcRisConfig>& ris,
                         const ReceiverModel& rx, const Vec3& point);

double electrical_snr(double received_power_w, const ReceiverModel& rx);
double rate_from_power(double received_power_w, const ReceiverModel& rx, RateModel model = RateModel::Shannon);

double rate_at(std::span<const Emitter> emitters, const std::optional<LcRisConfig>& ris, const ReceiverModel& rx,
               const Vec3& point, RateModel model = RateModel::Shannon);

/// Number of worker threads to use; 0 means hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Evaluates the quantity at every grid cell. Output is bit-identical for any
/// thread count.
FieldMap compute_field(const FieldScene& scene, Quantity quantity, const OpticsConfig& optics, unsigned threads = 1);

struct UniformityReport {
    double min = 0.0;
    double max = 0.0;
    double avg = 0.0;
    double uniformity = 0.0;
};

/// Min-to-average ratio; an all-zero map reports uniformity 0.
UniformityReport uniformity(const FieldMap& map);

/// (new / baseline - 1) * 100.
double gain_percent(double new_value, double baseline);

struct ZoneSpec {
    double task_side_m = 2.5;
    double surround_band_m = 0.5;
    double task_lux = 400.0;
    double surround_lux = 500.0;
    double background_lux = 200.0;
    double area_threshold_lux = 400.0;

    bool operator==(const ZoneSpec&) const = default;
};

void validate(const ZoneSpec& z);

struct ZoneVerdict {
    std::string name;
    std::size_t cells = 0;
    /// Unset when the zone holds no grid cells.
    std::optional<double> min_lux;
    double threshold_lux = 0.0;
    bool pass = true;
};

struct ComplianceReport {
    ZoneVerdict task;
    ZoneVerdict surround;
    ZoneVerdict background;
    double area_threshold_lux = 400.0;
    double fraction_above_threshold = 0.0;

    bool all_pass() const { return task.pass && surround.pass && background.pass; }
};

/// Zones are concentric squares about the room center. A band surrounds the
/// task square and everything outside the band is background.
ComplianceReport classify_compliance(const FieldMap& map, const ZoneSpec& zones);

}  // namespace risvlc
