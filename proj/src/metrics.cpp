// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "risvlc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace risvlc {

std::string_view quantity_name(Quantity q) { return q == Quantity::Illuminance ? "illuminance" : "rate"; }

std::string_view quantity_units(Quantity q) { return q == Quantity::Illuminance ? "lux" : "bit/s"; }

void validate(const FieldMap& map) {
    if (map.nx < 1 || map.ny < 1) throw std::invalid_argument("field map must have positive dimensions");
    if (map.values.size() != static_cast<Eigen::Index>(map.nx) * map.ny)
        throw std::invalid_argument("field map length must equal nx * ny");
    if (!map.values.allFinite()) throw std::invalid_argument("field map values must be finite");
    if ((map.values < 0.0).any()) throw std::invalid_argument("field map values must be >= 0");
}

double illuminance_at(std::span<const Emitter> emitters, const std::optional<LcRisConfig>& ris,
                      const Photometry& photometry, const ConcentratorConfig& concentrator, const Vec3& point) {
    const double delta = photometry.delta_w_per_lm();
    const double slab = ris ? amplification_factor(*ris) * lc_transmission(*ris) : 1.0;
    double lux = 0.0;
    for (const Emitter& e : emitters) {
        const LinkGeometry g = link_geometry(e, point);
        if (g.cos_irradiance < 0.0 || g.cos_incidence < 0.0) continue;
        const double m = e.lambertian_order;
        const double conc = ris ? concentrator_gain(g.incidence_angle_rad, concentrator, e.semi_angle_deg) : 1.0;
        lux += slab * e.power_w * (m + 1.0) / (2.0 * std::numbers::pi * g.distance_m * g.distance_m * delta) *
               std::pow(g.cos_irradiance, m) * g.cos_incidence * conc;
    }
    return lux;
}

double received_power_at(std::span<const Emitter> emitters, const std::optional<LcRisConfig>& ris,
                         const ReceiverModel& rx, const Vec3& point) {
    double p = 0.0;
    for (const Emitter& e : emitters)
        p += effective_emitted_power(e.power_w, ris) * los_gain(link_geometry(e, point), e.lambertian_order, rx);
    return p;
}

double electrical_snr(double received_power_w, const ReceiverModel& rx) {
    const double signal = rx.responsivity_a_per_w * received_power_w;
    return signal * signal / (rx.noise_psd_a2_per_hz * rx.bandwidth_hz);
}

double rate_from_power(double received_power_w, const ReceiverModel& rx, RateModel model) {
    if (received_power_w < 0.0 || std::isnan(received_power_w))
        throw std::invalid_argument("received power must be non-negative");
    if (received_power_w == 0.0) return 0.0;
    double snr = electrical_snr(received_power_w, rx);
    if (model == RateModel::LowerBound) snr *= std::numbers::e / (2.0 * std::numbers::pi);
    return rx.bandwidth_hz * std::log2(1.0 + snr);
}

double rate_at(std::span<const Emitter> emitters, const std::optional<LcRisConfig>& ris, const ReceiverModel& rx,
               const Vec3& point, RateModel model) {
    return rate_from_power(received_power_at(emitters, ris, rx, point), rx, model);
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

FieldMap compute_field(const FieldScene& scene, Quantity quantity, const OpticsConfig& optics, unsigned threads) {
    const std::vector<Vec3> points = grid_points(scene.room, scene.grid);

    FieldMap map;
    map.nx = scene.grid.nx;
    map.ny = scene.grid.ny;
    map.values = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(points.size()));
    map.quantity = quantity;
    map.scheme = scene.label;
    map.units = std::string(quantity_units(quantity));
    map.cell_x_m = scene.room.length_m / scene.grid.nx;
    map.cell_y_m = scene.room.width_m / scene.grid.ny;

    // Each cell is written by exactly one worker; the per-cell emitter sum
    // runs in fixed order, so the result does not depend on the split.
    auto eval_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            map.values[static_cast<Eigen::Index>(k)] =
                quantity == Quantity::Illuminance
                    ? illuminance_at(scene.emitters, scene.ris, optics.photometry, optics.concentrator, points[k])
                    : rate_at(scene.emitters, scene.ris, optics.receiver, points[k], optics.rate_model);
        }
    };

    const std::size_t n = points.size();
    const std::size_t workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(n, 1));
    if (workers <= 1) {
        eval_range(0, n);
        return map;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back([&, w, begin, end] {
                try {
                    eval_range(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return map;
}

UniformityReport uniformity(const FieldMap& map) {
    if (map.values.size() == 0) throw std::invalid_argument("uniformity of an empty map");
    UniformityReport r;
    r.min = map.values.minCoeff();
    r.max = map.values.maxCoeff();
    r.avg = map.values.mean();
    r.uniformity = r.avg > 0.0 ? r.min / r.avg : 0.0;
    return r;
}

double gain_percent(double new_value, double baseline) {
    if (!(baseline > 0.0)) throw std::invalid_argument("gain baseline must be > 0");
    return (new_value / baseline - 1.0) * 100.0;
}

void validate(const ZoneSpec& z) {
    if (!(z.task_side_m >= 0.0)) throw std::invalid_argument("task side must be >= 0");
    if (!(z.surround_band_m >= 0.0)) throw std::invalid_argument("surround band must be >= 0");
    if (!(z.task_lux >= 0.0 && z.surround_lux >= 0.0 && z.background_lux >= 0.0 && z.area_threshold_lux >= 0.0))
        throw std::invalid_argument("lux thresholds must be >= 0");
}

namespace {

void absorb(ZoneVerdict& zone, double value) {
    ++zone.cells;
    zone.min_lux = zone.min_lux ? std::min(*zone.min_lux, value) : value;
}

void settle(ZoneVerdict& zone) { zone.pass = !zone.min_lux || *zone.min_lux >= zone.threshold_lux; }

}  // namespace

ComplianceReport classify_compliance(const FieldMap& map, const ZoneSpec& zones) {
    validate(map);
    validate(zones);
    ComplianceReport r;
    r.task = {"task", 0, std::nullopt, zones.task_lux, true};
    r.surround = {"immediate_surrounding", 0, std::nullopt, zones.surround_lux, true};
    r.background = {"background", 0, std::nullopt, zones.background_lux, true};
    r.area_threshold_lux = zones.area_threshold_lux;

    const double cx = map.nx * map.cell_x_m / 2.0;
    const double cy = map.ny * map.cell_y_m / 2.0;
    const double task_half = zones.task_side_m / 2.0;
    const double outer_half = task_half + zones.surround_band_m;
    std::size_t above = 0;
    for (int j = 0; j < map.ny; ++j) {
        for (int i = 0; i < map.nx; ++i) {
            const double v = map.at(i, j);
            const double reach = std::max(std::abs(map.x_m(i) - cx), std::abs(map.y_m(j) - cy));
            if (reach <= task_half)
                absorb(r.task, v);
            else if (reach <= outer_half)
                absorb(r.surround, v);
            else
                absorb(r.background, v);
            if (v >= zones.area_threshold_lux) ++above;
        }
    }
    settle(r.task);
    settle(r.surround);
    settle(r.background);
    r.fraction_above_threshold = static_cast<double>(above) / static_cast<double>(map.size());
    return r;
}

}  // namespace risvlc
