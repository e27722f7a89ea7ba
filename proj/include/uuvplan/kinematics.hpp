#pragma once

#include <vector>

#include "uuvplan/current_field.hpp"
#include "uuvplan/geometry.hpp"
#include "uuvplan/grid_map.hpp"
#include "uuvplan/neural_planner.hpp"

namespace uuvplan {

enum class Variant { bnnp, cbnnp };

enum class CellClass { free_cell, obstacle, out_of_bounds };

/// Maps a continuous position to its containing cell under the cell-center
/// convention (cell (x,y) spans [x-0.5, x+0.5) per axis). A position outside
/// the union of cells is out of bounds.
CellClass classify_cell(const Vec& position, const GridMap& map);

/// Containing cell of a continuous position (nearest lattice point); valid
/// only when classify_cell is not out_of_bounds.
Cell containing_cell(const Vec& position, int dims);

enum class Outcome { reached, collision, fail };

struct SimParams {
    double dt = 0.01;               // s
    double capture_radius = 0.25;   // cells
    double v_max = 2.0;             // m/s, informational saturation threshold
    double time_limit_factor = 10.0;// multiple of the ideal path time
    double desired_speed = 1.0;     // m/s
    double gain = 0.5;              // k_g, used by bnnp replanning

    void validate() const;
};

struct Trajectory {
    std::vector<double> times;      // strictly increasing
    std::vector<Vec> positions;     // one per time sample
    std::vector<Vec> commanded;     // velocity commanded over each step
    std::vector<Vec> currents;      // current sampled over each step
    Outcome outcome = Outcome::fail;
    double traveled_length = 0.0;   // m
    double deviation_max = 0.0;     // m, max distance from the planned polyline
    int saturated_steps = 0;        // steps where |commanded| exceeded v_max
    int replans = 0;                // bnnp replanning events
};

/// Integrates the vehicle along the plan with explicit Euler at step dt.
///
/// The commanded velocity always aims at the current target waypoint at the
/// configured speed. Under cbnnp the commanded velocity is the compensated
/// one, so the realized velocity equals the desired one and the vehicle
/// rides the polyline exactly; integration steps are clipped to land on a
/// waypoint whenever it lies on the velocity ray within the step. Under
/// bnnp the realized velocity is desired + current, and whenever drift
/// moves the vehicle into a cell that is neither its target nor the cell it
/// just left, the remaining path is replanned from the cell it actually
/// occupies, propagating the positional error into the plan.
///
/// A waypoint is considered passed when the vehicle lands on it exactly or
/// begins to recede from it inside the capture radius. Termination: passing
/// the final waypoint (reached), entering an obstacle cell (collision),
/// leaving the map or exceeding the time limit (fail).
Trajectory simulate(const GridMap& map, const PlanPath& plan, Variant variant,
                    const CurrentSpec& current, const SimParams& params);

std::string to_string(Variant variant);
Variant variant_from_string(const std::string& name);
std::string to_string(Outcome outcome);

}  // namespace uuvplan
