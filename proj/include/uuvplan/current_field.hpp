#pragma once

#include <string>

#include "uuvplan/geometry.hpp"

namespace uuvplan {

enum class CurrentKind { static2d, static3d, dynamic2d };

/// Ocean-current model: spatially uniform, either constant (static kinds) or
/// sinusoidally varying in direction and speed (dynamic2d). Angles are kept
/// in degrees and converted once on sampling.
///
/// 3D convention: theta_xy is the elevation above the X-Y plane and theta_xz
/// the azimuth within the X-Y plane, measured from +X (rotation away from
/// the X-Z plane). Components are
///   (s cos(el) cos(az), s cos(el) sin(az), s sin(el)).
struct CurrentSpec {
    CurrentKind kind = CurrentKind::static2d;
    double speed = 0.0;    // m/s, >= 0
    double theta_xy = 0.0; // degrees
    double theta_xz = 0.0; // degrees, 3D only

    // dynamic2d parameters
    double base_angle_deg = 0.0;
    double angle_amplitude_deg = 90.0;
    double angle_period_s = 20.0;
    double speed_amplitude = 0.2; // m/s
    double speed_period_s = 15.0;

    int dims() const { return kind == CurrentKind::static3d ? 3 : 2; }

    static CurrentSpec none(int dims) {
        CurrentSpec spec;
        spec.kind = dims == 3 ? CurrentKind::static3d : CurrentKind::static2d;
        spec.speed = 0.0;
        return spec;
    }

    static CurrentSpec static_2d(double speed, double theta_deg) {
        CurrentSpec spec;
        spec.kind = CurrentKind::static2d;
        spec.speed = speed;
        spec.theta_xy = theta_deg;
        return spec;
    }

    static CurrentSpec static_3d(double speed, double elevation_deg, double azimuth_deg) {
        CurrentSpec spec;
        spec.kind = CurrentKind::static3d;
        spec.speed = speed;
        spec.theta_xy = elevation_deg;
        spec.theta_xz = azimuth_deg;
        return spec;
    }

    static CurrentSpec dynamic_default() {
        CurrentSpec spec;
        spec.kind = CurrentKind::dynamic2d;
        spec.speed = 0.3; // base speed
        return spec;
    }
};

/// Current velocity at a position and time. Static kinds ignore both
/// arguments; the position dependence is kept in the interface for
/// extension. Pure function, freely shareable.
Vec sample_current(const CurrentSpec& spec, const Vec& position, double time_s);

std::string to_string(CurrentKind kind);
CurrentKind current_kind_from_string(const std::string& name);

}  // namespace uuvplan
