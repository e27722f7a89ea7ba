#include "uuvplan/kinematics.hpp"

#include <cmath>

#include "uuvplan/guidance.hpp"

namespace uuvplan {

void SimParams::validate() const {
    if (dt <= 0.0) throw std::invalid_argument("dt must be positive");
    if (capture_radius <= 0.0 || capture_radius >= 0.5)
        throw std::invalid_argument("capture radius must lie in (0, 0.5)");
    if (v_max <= 0.0) throw std::invalid_argument("v_max must be positive");
    if (time_limit_factor <= 0.0)
        throw std::invalid_argument("time limit factor must be positive");
    if (desired_speed <= 0.0) throw std::invalid_argument("desired speed must be positive");
    if (!(gain > 0.0 && gain <= 1.0)) throw std::invalid_argument("gain must lie in (0, 1]");
}

Cell containing_cell(const Vec& position, int dims) {
    Cell c;
    c.dims = dims;
    for (int i = 0; i < dims; ++i)
        c.c[static_cast<size_t>(i)] = static_cast<int>(std::floor(position[i] + 0.5));
    return c;
}

CellClass classify_cell(const Vec& position, const GridMap& map) {
    if (position.dims != map.dims()) return CellClass::out_of_bounds;
    for (int i = 0; i < map.dims(); ++i) {
        const double lo = -0.5;
        const double hi = map.extent()[static_cast<size_t>(i)] - 0.5;
        if (position[i] < lo || position[i] >= hi) return CellClass::out_of_bounds;
    }
    const Cell cell = containing_cell(position, map.dims());
    return map.is_obstacle(cell) ? CellClass::obstacle : CellClass::free_cell;
}

Trajectory simulate(const GridMap& map, const PlanPath& plan, Variant variant,
                    const CurrentSpec& current, const SimParams& params) {
    params.validate();
    if (plan.waypoints.empty())
        throw std::invalid_argument("simulate needs a non-empty plan");
    if (current.dims() != map.dims())
        throw std::invalid_argument("current spec arity does not match the map");

    const double speed = params.desired_speed;
    const auto& reference = plan.waypoints;
    const double planned_len =
        reference.size() >= 2 ? path_length(reference) : 0.0;
    const double time_limit =
        params.time_limit_factor * std::max(planned_len, 1.0) / speed;

    std::vector<Cell> route = plan.waypoints;
    const Cell dest_cell = route.back();
    std::size_t target_idx = route.size() > 1 ? 1 : 0;

    Trajectory traj;
    Vec pos = Vec::from_cell(route[0]);
    double t = 0.0;
    traj.times.push_back(t);
    traj.positions.push_back(pos);
    Cell last_cell = route[0];

    while (true) {
        if (t >= time_limit) {
            traj.outcome = Outcome::fail;
            break;
        }

        const Vec target = Vec::from_cell(route[target_idx]);
        Vec offset = target - pos;
        double dist = offset.norm();

        // Already sitting on the target (e.g. single-waypoint route).
        if (dist < 1e-12) {
            if (target_idx + 1 >= route.size()) {
                traj.outcome = Outcome::reached;
                break;
            }
            ++target_idx;
            continue;
        }

        const Vec v_desired = (speed / dist) * offset;
        const Vec v_current = sample_current(current, pos, t);
        const Vec v_commanded =
            variant == Variant::cbnnp ? compensate(v_desired, v_current) : v_desired;
        const Vec v_actual =
            variant == Variant::cbnnp ? v_desired : v_desired + v_current;
        if (feasibility_check(v_commanded, params.v_max) == Feasibility::saturated)
            ++traj.saturated_steps;

        const double rate = v_actual.norm();
        if (rate < 1e-12) {
            // Current exactly cancels the commanded velocity; wait it out.
            t += params.dt;
            continue;
        }

        // Land exactly on the target when it lies on the velocity ray within
        // this step; keeps the compensated trajectory on the polyline through
        // corners and kills accumulated round-off at every waypoint.
        bool landed = false;
        const Vec prev = pos;
        if (dist <= rate * params.dt && dot(offset, v_actual) > 0.0 &&
            cross_norm(offset, v_actual) <= 1e-9 * dist * rate) {
            pos = target;
            t += dist / rate;
            landed = true;
        } else {
            pos = pos + params.dt * v_actual;
            t += params.dt;
        }

        traj.traveled_length += (pos - prev).norm();
        traj.times.push_back(t);
        traj.positions.push_back(pos);
        traj.commanded.push_back(v_commanded);
        traj.currents.push_back(v_current);
        traj.deviation_max =
            std::max(traj.deviation_max, point_polyline_distance(pos, reference));

        const CellClass cls = classify_cell(pos, map);
        if (cls == CellClass::obstacle) {
            traj.outcome = Outcome::collision;
            break;
        }
        if (cls == CellClass::out_of_bounds) {
            traj.outcome = Outcome::fail;
            break;
        }

        // A waypoint counts as passed on an exact landing, or once the
        // vehicle stops closing in on it inside the capture radius.
        const double new_dist = (target - pos).norm();
        if (landed || (new_dist <= params.capture_radius && new_dist >= dist)) {
            if (target_idx + 1 >= route.size()) {
                traj.outcome = Outcome::reached;
                break;
            }
            ++target_idx;
        }

        // Drift moved the vehicle into a cell that is neither its target nor
        // the one it just left: the planner now holds the wrong location, so
        // the remaining path is rebuilt from the cell it actually occupies.
        if (variant == Variant::bnnp) {
            const Cell cell = containing_cell(pos, map.dims());
            if (!(cell == last_cell)) {
                last_cell = cell;
                const bool on_route =
                    cell == route[target_idx] ||
                    (target_idx > 0 && cell == route[target_idx - 1]);
                if (!on_route) {
                    if (cell == dest_cell) {
                        route = {dest_cell};
                        target_idx = 0;
                        ++traj.replans;
                    } else if (!map.is_obstacle(cell)) {
                        PlanPath replanned = plan_bnnp(map, cell, dest_cell, params.gain);
                        if (replanned.reached() && replanned.waypoints.size() >= 2) {
                            route = std::move(replanned.waypoints);
                            target_idx = 1;
                            ++traj.replans;
                        }
                    }
                }
            }
        }
    }
    return traj;
}

std::string to_string(Variant variant) {
    return variant == Variant::bnnp ? "bnnp" : "cbnnp";
}

Variant variant_from_string(const std::string& name) {
    if (name == "bnnp") return Variant::bnnp;
    if (name == "cbnnp") return Variant::cbnnp;
    throw std::invalid_argument("unknown variant: " + name);
}

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::reached: return "reached";
        case Outcome::collision: return "collision";
        case Outcome::fail: return "fail";
    }
    return "unknown";
}

}  // namespace uuvplan
