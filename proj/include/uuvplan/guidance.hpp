#pragma once

#include <vector>

#include "uuvplan/current_field.hpp"
#include "uuvplan/geometry.hpp"
#include "uuvplan/neural_planner.hpp"

namespace uuvplan {

/// Desired, ocean-current, and commanded velocity for one path segment.
/// Invariant: commanded + current == desired componentwise, so the physical
/// resultant of the commanded velocity under the current is the desired one.
struct VelocityTriple {
    Vec desired;   // v_d
    Vec current;   // v_cur
    Vec commanded; // v_plan
};

/// Unit vector from one cell center to a neighboring one, scaled to `speed`.
Vec desired_velocity(const Cell& from, const Cell& to, double speed);

/// Parallelogram-law current cancellation: commanded = desired - current.
Vec compensate(const Vec& desired, const Vec& current);

enum class Feasibility { feasible, saturated };

/// Reports whether a commanded velocity exceeds the vehicle's speed limit.
/// The check is informational; callers decide whether to cap.
Feasibility feasibility_check(const Vec& commanded, double v_max);

struct CbnnpPlan {
    PlanPath path;
    std::vector<VelocityTriple> schedule; // one triple per path segment
};

/// Full pipeline: plan with the neural field, then derive the per-segment
/// velocity schedule. The current is sampled at each segment's start time
/// and held over the segment; waypoints depend only on geometry, so they
/// are identical for every current specification.
CbnnpPlan plan_cbnnp(const GridMap& map, const Cell& origin, const Cell& destination,
                     double gain, const CurrentSpec& current, double speed = 1.0);

}  // namespace uuvplan
