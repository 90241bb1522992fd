// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <variant>
#include <vector>

namespace risvlc {

using Vec3 = Eigen::Vector3d;

struct Room {
    double length_m = 5.0;
    double width_m = 5.0;
    double height_m = 3.0;

    bool operator==(const Room&) const = default;
};

void validate(const Room& room);

/// Point-source LED array with a Lambertian emission pattern.
struct Emitter {
    Vec3 position = Vec3::Zero();
    Vec3 normal = Vec3(0.0, 0.0, -1.0);
    double power_w = 0.0;
    double semi_angle_deg = 60.0;
    double lambertian_order = 1.0;
};

/// Builds an emitter and derives its Lambertian order from the semi-angle.
Emitter make_emitter(const Vec3& position, const Vec3& normal, double power_w, double semi_angle_deg);

struct LcRisConfig;

namespace layout {

struct Centralized {};
struct Distributed {};
struct Adt {
    double tau_deg = 45.0;
};
/// Centralized array fronted by a liquid-crystal RIS. Only the steering part of
/// the RIS config matters for placement.
struct RisCentralized {
    double steering_deviation_rad = 0.0;
    double steering_azimuth_deg = 0.0;
};

}  // namespace layout

struct LayoutScheme {
    std::variant<layout::Centralized, layout::Distributed, layout::Adt, layout::RisCentralized> kind;
    int array_count = 4;
};

LayoutScheme ris_layout(const LcRisConfig& cfg);

struct GridSpec {
    int nx = 100;
    int ny = 100;
    double plane_height_m = 0.85;

    bool operator==(const GridSpec&) const = default;
};

void validate(const GridSpec& spec, const Room& room);

/// Distance and angles of one emitter-to-point link. The cosines are kept next
/// to the angles so gain evaluation never round-trips through acos/cos.
struct LinkGeometry {
    double distance_m = 0.0;
    double irradiance_angle_rad = 0.0;
    double incidence_angle_rad = 0.0;
    double cos_irradiance = 1.0;
    double cos_incidence = 1.0;

    static LinkGeometry from_angles(double distance_m, double irradiance_rad, double incidence_rad);
};

/// Boresight directions of the angle-diversity arrays, tilted by tau toward the
/// azimuths 45 + k*360/count degrees (the room diagonals for four arrays).
std::vector<Vec3> adt_normals(double tau_deg, int count = 4);

std::vector<Emitter> build_layout(const LayoutScheme& scheme, const Room& room, double total_power_w,
                                  double semi_angle_deg);

/// Cell-center sampling of the receiver plane. Index j * nx + i holds
/// ((i + 0.5) L / nx, (j + 0.5) W / ny, plane height).
std::vector<Vec3> grid_points(const Room& room, const GridSpec& spec);

inline const Vec3 kUpwardReceiver{0.0, 0.0, 1.0};

LinkGeometry link_geometry(const Emitter& e, const Vec3& p, const Vec3& receiver_normal = kUpwardReceiver);

/// Rotates `v` away from its current direction by `angle_rad`, tilting toward
/// the horizontal azimuth `azimuth_deg`. Used for static beam steering.
Vec3 tilt_toward(const Vec3& v, double angle_rad, double azimuth_deg);

}  // namespace risvlc
