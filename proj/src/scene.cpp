// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "risvlc/scene.hpp"

#include "risvlc/optics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace risvlc {

void validate(const Room& room) {
    if (!(room.length_m > 0.0)) throw std::invalid_argument("room length must be > 0");
    if (!(room.width_m > 0.0)) throw std::invalid_argument("room width must be > 0");
    if (!(room.height_m > 0.0)) throw std::invalid_argument("room height must be > 0");
}

void validate(const GridSpec& spec, const Room& room) {
    if (spec.nx < 1 || spec.ny < 1) throw std::invalid_argument("grid dimensions must be >= 1");
    if (!(spec.plane_height_m >= 0.0 && spec.plane_height_m < room.height_m))
        throw std::invalid_argument("receiver plane must lie in [0, room height)");
}

Emitter make_emitter(const Vec3& position, const Vec3& normal, double power_w, double semi_angle_deg) {
    if (!(power_w >= 0.0)) throw std::invalid_argument("emitter power must be >= 0");
    const double norm = normal.norm();
    if (!(norm > 0.0)) throw std::invalid_argument("emitter normal must be non-zero");
    Emitter e;
    e.position = position;
    e.normal = normal / norm;
    e.power_w = power_w;
    e.semi_angle_deg = semi_angle_deg;
    e.lambertian_order = lambertian_order(semi_angle_deg);
    return e;
}

LayoutScheme ris_layout(const LcRisConfig& cfg) {
    return LayoutScheme{layout::RisCentralized{steering_deviation(cfg), cfg.steering_azimuth_deg}};
}

LinkGeometry LinkGeometry::from_angles(double distance_m, double irradiance_rad, double incidence_rad) {
    LinkGeometry g;
    g.distance_m = distance_m;
    g.irradiance_angle_rad = irradiance_rad;
    g.incidence_angle_rad = incidence_rad;
    g.cos_irradiance = std::cos(irradiance_rad);
    g.cos_incidence = std::cos(incidence_rad);
    return g;
}

std::vector<Vec3> adt_normals(double tau_deg, int count) {
    if (!(tau_deg > 0.0 && tau_deg < 90.0)) throw std::invalid_argument("ADT elevation tau must lie in (0, 90) degrees");
    if (count < 1) throw std::invalid_argument("ADT array count must be >= 1");
    const double tau = deg2rad(tau_deg);
    std::vector<Vec3> normals;
    normals.reserve(count);
    for (int k = 0; k < count; ++k) {
        const double psi = deg2rad(45.0 + 360.0 * k / count);
        normals.emplace_back(std::sin(tau) * std::cos(psi), std::sin(tau) * std::sin(psi), -std::cos(tau));
    }
    return normals;
}

Vec3 tilt_toward(const Vec3& v, double angle_rad, double azimuth_deg) {
    if (angle_rad == 0.0) return v;
    const double az = deg2rad(azimuth_deg);
    const Vec3 horizontal(std::cos(az), std::sin(az), 0.0);
    const Vec3 axis = v.cross(horizontal);
    if (axis.norm() < 1e-15) return v;
    return Eigen::AngleAxisd(angle_rad, axis.normalized()) * v;
}

namespace {

struct LayoutBuilder {
    const Room& room;
    double total_power_w;
    double semi_angle_deg;
    int count;

    Vec3 ceiling_center() const { return {room.length_m / 2.0, room.width_m / 2.0, room.height_m}; }

    std::vector<Emitter> operator()(const layout::Centralized&) const {
        return {make_emitter(ceiling_center(), Vec3(0.0, 0.0, -1.0), total_power_w, semi_angle_deg)};
    }

    std::vector<Emitter> operator()(const layout::RisCentralized& r) const {
        const Vec3 normal = tilt_toward(Vec3(0.0, 0.0, -1.0), r.steering_deviation_rad, r.steering_azimuth_deg);
        return {make_emitter(ceiling_center(), normal, total_power_w, semi_angle_deg)};
    }

    std::vector<Emitter> operator()(const layout::Distributed&) const {
        // A side x side grid of lamps, each at the center of its room cell.
        const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(count))));
        if (side * side != count)
            throw std::invalid_argument("distributed layout needs a square array count, got " + std::to_string(count));
        std::vector<Emitter> out;
        out.reserve(count);
        const double each = total_power_w / count;
        for (int b = 0; b < side; ++b) {
            for (int a = 0; a < side; ++a) {
                const Vec3 pos((a + 0.5) * room.length_m / side, (b + 0.5) * room.width_m / side, room.height_m);
                out.push_back(make_emitter(pos, Vec3(0.0, 0.0, -1.0), each, semi_angle_deg));
            }
        }
        return out;
    }

    std::vector<Emitter> operator()(const layout::Adt& adt) const {
        std::vector<Emitter> out;
        out.reserve(count);
        const double each = total_power_w / count;
        for (const Vec3& n : adt_normals(adt.tau_deg, count))
            out.push_back(make_emitter(ceiling_center(), n, each, semi_angle_deg));
        return out;
    }
};

}  // namespace

std::vector<Emitter> build_layout(const LayoutScheme& scheme, const Room& room, double total_power_w,
                                  double semi_angle_deg) {
    validate(room);
    if (!(total_power_w >= 0.0)) throw std::invalid_argument("total power must be >= 0");
    if (scheme.array_count < 1) throw std::invalid_argument("array count must be >= 1");
    return std::visit(LayoutBuilder{room, total_power_w, semi_angle_deg, scheme.array_count}, scheme.kind);
}

std::vector<Vec3> grid_points(const Room& room, const GridSpec& spec) {
    validate(room);
    validate(spec, room);
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(spec.nx) * spec.ny);
    const double dx = room.length_m / spec.nx;
    const double dy = room.width_m / spec.ny;
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i) pts.emplace_back((i + 0.5) * dx, (j + 0.5) * dy, spec.plane_height_m);
    return pts;
}

LinkGeometry link_geometry(const Emitter& e, const Vec3& p, const Vec3& receiver_normal) {
    const Vec3 d = p - e.position;
    const double l = d.norm();
    if (!(l > 0.0)) throw std::invalid_argument("link endpoints coincide");
    const Vec3 u = d / l;
    LinkGeometry g;
    g.distance_m = l;
    g.cos_irradiance = std::clamp(u.dot(e.normal), -1.0, 1.0);
    g.cos_incidence = std::clamp(-u.dot(receiver_normal), -1.0, 1.0);
    g.irradiance_angle_rad = std::acos(g.cos_irradiance);
    g.incidence_angle_rad = std::acos(g.cos_incidence);
    return g;
}

}  // namespace risvlc
