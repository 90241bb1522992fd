// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

// Straight-line reference evaluator for the four transmitter schemes. It
// shares no code with the library. Every step from emitter placement to the
// final rate is spelled out here from the closed-form expressions so it can
// cross-check compute_field.

#pragma once

#include <cmath>
#include <vector>

namespace risvlc_oracle {

enum Scheme { kCentralized = 0, kDistributed = 1, kAdt = 2, kRis = 3 };
enum What { kLux = 0, kRate = 1 };

struct Params {
    double length = 5.0, width = 5.0, height = 3.0;
    int nx = 100, ny = 100;
    double plane = 0.85;
    double semi_deg = 68.0;
    double tau_deg = 45.0;
    double power = 1.0;
    // slab
    double n_air = 1.0, n_lc = 1.55, thickness = 7.5e-4, gamma = 4291.8344, v_drive = 2.1, v_threshold = 1.34;
    // transmitter concentrator, acceptance defaults to the semi-angle
    double f = 1.0;
    double accept_deg = -1.0;
    // receiver
    double area = 1e-4, fov_deg = 70.0, rho = 0.4, n0 = 2.2e-22, bandwidth = 2e8, filter = 1.0;
    double v_lambda = 0.503;
};

inline std::vector<double> reference_map(Scheme scheme, What what, const Params& p) {
    const double pi = 3.14159265358979323846;
    const double rad = pi / 180.0;

    // Emitters as flat arrays: x, y, z, nx, ny, nz, watts.
    std::vector<double> em;
    auto add = [&](double x, double y, double z, double a, double b, double c, double w) {
        em.insert(em.end(), {x, y, z, a, b, c, w});
    };
    if (scheme == kCentralized || scheme == kRis) {
        add(p.length / 2, p.width / 2, p.height, 0, 0, -1, p.power);
    } else if (scheme == kDistributed) {
        add(p.length / 4, p.width / 4, p.height, 0, 0, -1, p.power / 4);
        add(3 * p.length / 4, p.width / 4, p.height, 0, 0, -1, p.power / 4);
        add(p.length / 4, 3 * p.width / 4, p.height, 0, 0, -1, p.power / 4);
        add(3 * p.length / 4, 3 * p.width / 4, p.height, 0, 0, -1, p.power / 4);
    } else {
        const double st = std::sin(p.tau_deg * rad), ct = std::cos(p.tau_deg * rad);
        const double az[4] = {45.0, 135.0, 225.0, 315.0};
        for (double a : az)
            add(p.length / 2, p.width / 2, p.height, st * std::cos(a * rad), st * std::sin(a * rad), -ct, p.power / 4);
    }

    const double c_half = std::cos(p.semi_deg * rad);
    const double m = std::log(0.5) / std::log(c_half);
    const double lm_per_w = 683.0 * p.v_lambda;

    double slab = 1.0;
    if (scheme == kRis) {
        const double t = 4.0 * p.n_air * p.n_lc / ((p.n_air + p.n_lc) * (p.n_air + p.n_lc));
        slab = t * t;
        if (p.v_drive > p.v_threshold) slab *= std::exp(p.gamma * p.thickness);
    }
    const double accept = (p.accept_deg > 0 ? p.accept_deg : p.semi_deg) * rad;
    const double conc = p.f * p.f / (std::sin(accept) * std::sin(accept));

    std::vector<double> out(static_cast<std::size_t>(p.nx) * p.ny, 0.0);
    for (int j = 0; j < p.ny; ++j) {
        for (int i = 0; i < p.nx; ++i) {
            const double x = (i + 0.5) * p.length / p.nx;
            const double y = (j + 0.5) * p.width / p.ny;
            double lux = 0.0, watts = 0.0;
            for (std::size_t e = 0; e < em.size(); e += 7) {
                const double dx = x - em[e], dy = y - em[e + 1], dz = p.plane - em[e + 2];
                const double d2 = dx * dx + dy * dy + dz * dz;
                const double d = std::sqrt(d2);
                const double cos_irr = (dx * em[e + 3] + dy * em[e + 4] + dz * em[e + 5]) / d;
                const double cos_inc = -dz / d;
                if (cos_irr < 0 || cos_inc < 0) continue;
                const double pattern = (m + 1) / (2 * pi * d2) * std::pow(cos_irr, m) * cos_inc;
                double g = 1.0;
                if (scheme == kRis) g = std::acos(cos_inc) <= accept ? conc : 0.0;
                lux += slab * em[e + 6] * pattern * lm_per_w * g;
                if (std::acos(cos_inc) <= p.fov_deg * rad)
                    watts += slab * em[e + 6] * pattern * p.area * p.filter;
            }
            double v = lux;
            if (what == kRate) {
                const double amps = p.rho * watts;
                v = watts > 0 ? p.bandwidth * std::log2(1.0 + amps * amps / (p.n0 * p.bandwidth)) : 0.0;
            }
            out[static_cast<std::size_t>(j) * p.nx + i] = v;
        }
    }
    return out;
}

}  // namespace risvlc_oracle
