// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "risvlc/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace risvlc {

/// Liquid-crystal RIS slab in front of the LED array.
struct LcRisConfig {
    double n_air = 1.0;
    double n_lc = 1.55;
    double thickness_m = 7.5e-4;
    /// Amplification gain coefficient. The default gives exp(gamma * d) = 25.
    double gamma_per_m = 4291.8344;
    double drive_voltage_v = 2.1;
    double threshold_voltage_v = 1.34;
    /// Thin-prism wedge angle used for static beam steering.
    double wedge_angle_rad = 0.0;
    /// Horizontal azimuth the steered boresight tilts toward.
    double steering_azimuth_deg = 0.0;

    bool operator==(const LcRisConfig&) const = default;
};

void validate(const LcRisConfig& cfg);

/// Non-imaging concentrator between the LED array and the RIS.
struct ConcentratorConfig {
    double refr_index_f = 1.0;
    /// Acceptance half angle; unset means "use the LED semi-angle".
    std::optional<double> accept_semi_angle_deg;
    /// Use f^2 / sin^2(phi) per link (floored at 1 degree) instead of the
    /// constant acceptance-cone gain.
    bool literal_paper_concentrator = false;

    bool operator==(const ConcentratorConfig&) const = default;
};

void validate(const ConcentratorConfig& c);

struct ReceiverModel {
    double area_m2 = 1e-4;
    double fov_semi_angle_deg = 70.0;
    double responsivity_a_per_w = 0.4;
    double noise_psd_a2_per_hz = 2.2e-22;
    double bandwidth_hz = 2e8;
    double filter_gain = 1.0;
    /// Refractive index of an optional receiver concentrator (acceptance = FOV).
    std::optional<double> concentrator_index;

    bool operator==(const ReceiverModel&) const = default;
};

void validate(const ReceiverModel& rx);

struct Photometry {
    double wavelength_nm = 510.0;
    double luminosity_v = 0.503;
    /// Optical-to-luminous conversion; unset means 1 / (683 V(lambda)).
    std::optional<double> delta_override_w_per_lm;

    double delta_w_per_lm() const {
        return delta_override_w_per_lm ? *delta_override_w_per_lm : 1.0 / (683.0 * luminosity_v);
    }

    bool operator==(const Photometry&) const = default;
};

void validate(const Photometry& ph);

/// Raised when a ray cannot leave the denser medium.
class TotalInternalReflection : public std::domain_error {
public:
    explicit TotalInternalReflection(double sine_ratio)
        : std::domain_error("total internal reflection (sine ratio " + std::to_string(sine_ratio) + ")"),
          sine_ratio_(sine_ratio) {}
    double sine_ratio() const noexcept { return sine_ratio_; }

private:
    double sine_ratio_;
};

template <typename Scalar>
constexpr Scalar deg2rad(Scalar deg) {
    return deg * std::numbers::pi_v<Scalar> / Scalar(180);
}

template <typename Scalar>
constexpr Scalar rad2deg(Scalar rad) {
    return rad * Scalar(180) / std::numbers::pi_v<Scalar>;
}

/// Cosine of an angle in degrees. The only rational-degree angles with
/// rational cosines are multiples of 60 and 90, and those come back exact
/// rather than carrying the rounding of pi.
template <typename Scalar>
Scalar cos_deg(Scalar deg) {
    const Scalar r = std::fmod(std::abs(deg), Scalar(360));
    if (r == Scalar(0)) return Scalar(1);
    if (r == Scalar(60) || r == Scalar(300)) return Scalar(0.5);
    if (r == Scalar(90) || r == Scalar(270)) return Scalar(0);
    if (r == Scalar(120) || r == Scalar(240)) return Scalar(-0.5);
    if (r == Scalar(180)) return Scalar(-1);
    return std::cos(deg2rad(r));
}

/// m = -1 / log2(cos(semi-angle)).
template <typename Scalar>
Scalar lambertian_order(Scalar semi_angle_deg) {
    if (!(semi_angle_deg > Scalar(0) && semi_angle_deg < Scalar(90)))
        throw std::domain_error("semi-angle must lie in (0, 90) degrees");
    return Scalar(-1) / std::log2(cos_deg(semi_angle_deg));
}

/// Normal-incidence Fresnel power transmittance of one interface.
template <typename Scalar>
Scalar fresnel_transmittance(Scalar n1, Scalar n2) {
    const Scalar s = n1 + n2;
    return Scalar(4) * n1 * n2 / (s * s);
}

/// Refraction angle from Snell's law. Throws TotalInternalReflection when the
/// sine of the refracted angle would exceed one.
template <typename Scalar>
Scalar snell_angle(Scalar theta_in_rad, Scalar n_from, Scalar n_to) {
    if (theta_in_rad < Scalar(0) || theta_in_rad > std::numbers::pi_v<Scalar> / 2)
        throw std::domain_error("incidence angle must lie in [0, pi/2]");
    const Scalar ratio = n_from * std::sin(theta_in_rad) / n_to;
    if (ratio > Scalar(1)) throw TotalInternalReflection(static_cast<double>(ratio));
    return std::asin(std::clamp(ratio, Scalar(-1), Scalar(1)));
}

/// Concentrator gain at incidence angle phi. The constant form is
/// f^2 / sin^2(acceptance) over the acceptance cone and zero outside.
double concentrator_gain(double phi_rad, const ConcentratorConfig& c, double led_semi_angle_deg = 60.0);

/// Receiver-side concentrator gain; 1 when none is configured.
double receiver_concentrator_gain(double phi_rad, const ReceiverModel& rx);

/// Line-of-sight DC gain of a Lambertian link.
double los_gain(const LinkGeometry& geom, double m, const ReceiverModel& rx);

bool ris_active(const LcRisConfig& cfg);

/// Transmission coefficient of the slab: entry and exit Fresnel faces.
double lc_transmission(const LcRisConfig& cfg);

/// exp(gamma * d) while the drive voltage exceeds threshold, otherwise 1.
double amplification_factor(const LcRisConfig& cfg);

/// Thin-prism boresight deviation (n_lc / n_air - 1) * wedge.
double steering_deviation(const LcRisConfig& cfg);

double effective_emitted_power(double p_in_w, const LcRisConfig& cfg);
double effective_emitted_power(double p_in_w, const std::optional<LcRisConfig>& cfg);

}  // namespace risvlc
