#pragma once

#include <optional>
#include <vector>

#include "uuvplan/geometry.hpp"
#include "uuvplan/grid_map.hpp"

namespace uuvplan {

/// Discrete-time Hopfield-type activity field over the grid. Each cell is a
/// neuron; a planning run repeatedly evaluates the activity of the current
/// cell's receptive field (its 8 or 26 neighbors) and moves to the winner.
/// Mutable during one planning run and confined to it; distinct runs over
/// the same map may execute concurrently.
struct NeuralField {
    std::vector<double> activities;   // per cell, init 0; range {-1} U [0, inf)
    std::vector<std::uint8_t> visits; // entry count per cell (covered iff > 0)
    double gain = 0.5;                // k_g in (0, 1]
    Cell destination;

    NeuralField(const GridMap& map, Cell destination, double gain);

    bool covered(const GridMap& map, const Cell& cell) const {
        return visits[map.index(cell)] > 0;
    }
};

enum class PlanStatus { reached, trapped, step_limit };

struct PlanPath {
    std::vector<Cell> waypoints; // first = origin; last = destination on success
    PlanStatus status = PlanStatus::reached;

    bool reached() const { return status == PlanStatus::reached; }
    double length() const { return path_length(waypoints); }
};

/// Piecewise-linear transfer: -1 for negative input, gain*x otherwise.
double transfer(double x, double gain);

/// External input term: -1 on obstacles, 0 on covered cells, +1 on fresh cells.
double external_input(const GridMap& map, const NeuralField& field, const Cell& cell);

/// Activity a candidate neighbor receives from the current cell:
/// g(a_current + exp(-dist(candidate, destination)) + input(candidate)).
/// The value is also recorded in the field's activity store.
double candidate_activity(NeuralField& field, const GridMap& map, const Cell& current,
                          const Cell& candidate);

/// Evaluates every neighbor of `current` and returns the one with maximal
/// activity (ties broken by the fixed lexicographic neighbor order).
/// Obstacle neighbors are never selected; returns nullopt when every
/// neighbor is an obstacle (trapped).
struct Selection {
    Cell cell;
    double activity;
};
std::optional<Selection> select_next(NeuralField& field, const GridMap& map,
                                     const Cell& current);

inline int default_step_limit(const GridMap& map) {
    int sum = 0;
    for (int e : map.extent()) sum += e;
    return 4 * sum;
}

/// Iterated neighbor activation from origin to destination. Each visited
/// cell is marked covered on entry; entering any cell a third time traps
/// the run, and exceeding the step limit aborts it.
PlanPath plan_bnnp(const GridMap& map, const Cell& origin, const Cell& destination,
                   double gain, int step_limit = 0);

}  // namespace uuvplan
