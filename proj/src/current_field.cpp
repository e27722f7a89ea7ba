#include "uuvplan/current_field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uuvplan {

namespace {
constexpr double deg2rad = std::numbers::pi / 180.0;
}

Vec sample_current(const CurrentSpec& spec, const Vec& position, double time_s) {
    (void)position; // spatially uniform in all supported kinds
    if (spec.speed < 0.0) throw std::invalid_argument("current speed must be >= 0");
    if (time_s < 0.0) throw std::invalid_argument("current sample time must be >= 0");

    switch (spec.kind) {
        case CurrentKind::static2d: {
            const double th = spec.theta_xy * deg2rad;
            return Vec(spec.speed * std::cos(th), spec.speed * std::sin(th));
        }
        case CurrentKind::static3d: {
            const double el = spec.theta_xy * deg2rad;
            const double az = spec.theta_xz * deg2rad;
            return Vec(spec.speed * std::cos(el) * std::cos(az),
                       spec.speed * std::cos(el) * std::sin(az),
                       spec.speed * std::sin(el));
        }
        case CurrentKind::dynamic2d: {
            constexpr double two_pi = 2.0 * std::numbers::pi;
            const double th = (spec.base_angle_deg +
                               spec.angle_amplitude_deg *
                                   std::sin(two_pi * time_s / spec.angle_period_s)) *
                              deg2rad;
            const double s = std::max(
                0.0, spec.speed + spec.speed_amplitude *
                                      std::sin(two_pi * time_s / spec.speed_period_s));
            return Vec(s * std::cos(th), s * std::sin(th));
        }
    }
    throw std::logic_error("unknown current kind");
}

std::string to_string(CurrentKind kind) {
    switch (kind) {
        case CurrentKind::static2d: return "static2d";
        case CurrentKind::static3d: return "static3d";
        case CurrentKind::dynamic2d: return "dynamic2d";
    }
    return "unknown";
}

CurrentKind current_kind_from_string(const std::string& name) {
    if (name == "static2d") return CurrentKind::static2d;
    if (name == "static3d") return CurrentKind::static3d;
    if (name == "dynamic2d") return CurrentKind::dynamic2d;
    throw std::invalid_argument("unknown current kind: " + name);
}

}  // namespace uuvplan
