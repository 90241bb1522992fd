// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "risvlc/optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risvlc {

void validate(const LcRisConfig& cfg) {
    if (!(cfg.n_air >= 1.0)) throw std::invalid_argument("n_air must be >= 1");
    if (!(cfg.n_lc >= cfg.n_air)) throw std::invalid_argument("n_lc must be >= n_air");
    if (!(cfg.thickness_m > 0.0)) throw std::invalid_argument("LC thickness must be > 0");
    if (!(cfg.gamma_per_m >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
    if (!(cfg.threshold_voltage_v > 0.0)) throw std::invalid_argument("threshold voltage must be > 0");
    if (!(std::abs(cfg.wedge_angle_rad) <= deg2rad(15.0)))
        throw std::invalid_argument("wedge angle must stay within the thin-prism range (15 degrees)");
}

void validate(const ConcentratorConfig& c) {
    if (!(c.refr_index_f >= 1.0)) throw std::invalid_argument("concentrator index must be >= 1");
    if (c.accept_semi_angle_deg && !(*c.accept_semi_angle_deg > 0.0 && *c.accept_semi_angle_deg <= 90.0))
        throw std::invalid_argument("acceptance semi-angle must lie in (0, 90]");
}

void validate(const ReceiverModel& rx) {
    if (!(rx.area_m2 > 0.0)) throw std::invalid_argument("detector area must be > 0");
    if (!(rx.fov_semi_angle_deg > 0.0 && rx.fov_semi_angle_deg <= 90.0))
        throw std::invalid_argument("field of view must lie in (0, 90]");
    if (!(rx.responsivity_a_per_w > 0.0)) throw std::invalid_argument("responsivity must be > 0");
    if (!(rx.noise_psd_a2_per_hz > 0.0)) throw std::invalid_argument("noise PSD must be > 0");
    if (!(rx.bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth must be > 0");
    if (!(rx.filter_gain > 0.0)) throw std::invalid_argument("filter gain must be > 0");
    if (rx.concentrator_index && !(*rx.concentrator_index >= 1.0))
        throw std::invalid_argument("receiver concentrator index must be >= 1");
}

void validate(const Photometry& ph) {
    if (!(ph.wavelength_nm > 0.0)) throw std::invalid_argument("wavelength must be > 0");
    if (!(ph.luminosity_v > 0.0 && ph.luminosity_v <= 1.0)) throw std::invalid_argument("V(lambda) must lie in (0, 1]");
    if (!(ph.delta_w_per_lm() > 0.0)) throw std::invalid_argument("delta must be > 0");
}

double concentrator_gain(double phi_rad, const ConcentratorConfig& c, double led_semi_angle_deg) {
    if (phi_rad < 0.0) return 0.0;
    const double accept = deg2rad(c.accept_semi_angle_deg.value_or(led_semi_angle_deg));
    if (phi_rad > accept) return 0.0;
    const double f2 = c.refr_index_f * c.refr_index_f;
    if (c.literal_paper_concentrator) {
        const double s = std::sin(std::max(phi_rad, deg2rad(1.0)));
        return f2 / (s * s);
    }
    const double s = std::sin(accept);
    return f2 / (s * s);
}

double receiver_concentrator_gain(double phi_rad, const ReceiverModel& rx) {
    if (!rx.concentrator_index) return 1.0;
    const double fov = deg2rad(rx.fov_semi_angle_deg);
    if (phi_rad < 0.0 || phi_rad > fov) return 0.0;
    const double s = std::sin(fov);
    return *rx.concentrator_index * *rx.concentrator_index / (s * s);
}

double los_gain(const LinkGeometry& geom, double m, const ReceiverModel& rx) {
    if (geom.cos_irradiance < 0.0 || geom.cos_incidence < 0.0) return 0.0;
    if (geom.incidence_angle_rad > deg2rad(rx.fov_semi_angle_deg)) return 0.0;
    const double l2 = geom.distance_m * geom.distance_m;
    return (m + 1.0) * rx.area_m2 / (2.0 * std::numbers::pi * l2) * std::pow(geom.cos_irradiance, m) *
           rx.filter_gain * receiver_concentrator_gain(geom.incidence_angle_rad, rx) * geom.cos_incidence;
}

bool ris_active(const LcRisConfig& cfg) { return cfg.drive_voltage_v > cfg.threshold_voltage_v; }

double lc_transmission(const LcRisConfig& cfg) {
    const double t = fresnel_transmittance(cfg.n_air, cfg.n_lc);
    return t * t;
}

double amplification_factor(const LcRisConfig& cfg) {
    return ris_active(cfg) ? std::exp(cfg.gamma_per_m * cfg.thickness_m) : 1.0;
}

double steering_deviation(const LcRisConfig& cfg) {
    if (!ris_active(cfg)) return 0.0;
    return (cfg.n_lc / cfg.n_air - 1.0) * cfg.wedge_angle_rad;
}

double effective_emitted_power(double p_in_w, const LcRisConfig& cfg) {
    if (!(p_in_w >= 0.0)) throw std::invalid_argument("input power must be >= 0");
    return amplification_factor(cfg) * lc_transmission(cfg) * p_in_w;
}

double effective_emitted_power(double p_in_w, const std::optional<LcRisConfig>& cfg) {
    if (!cfg) {
        if (!(p_in_w >= 0.0)) throw std::invalid_argument("input power must be >= 0");
        return p_in_w;
    }
    return effective_emitted_power(p_in_w, *cfg);
}

}  // namespace risvlc
