#include "uuvplan/neural_planner.hpp"

#include <cmath>

namespace uuvplan {

NeuralField::NeuralField(const GridMap& map, Cell destination_, double gain_)
    : activities(map.cell_count(), 0.0),
      visits(map.cell_count(), 0),
      gain(gain_),
      destination(destination_) {
    if (!(gain > 0.0 && gain <= 1.0))
        throw std::invalid_argument("gain must lie in (0, 1]");
    if (!map.is_free(destination))
        throw std::invalid_argument("destination must be a free in-bounds cell: " +
                                    destination.str());
}

double transfer(double x, double gain) {
    return x < 0.0 ? -1.0 : gain * x;
}

double external_input(const GridMap& map, const NeuralField& field, const Cell& cell) {
    if (map.is_obstacle(cell)) return -1.0;
    if (field.covered(map, cell)) return 0.0;
    return 1.0;
}

double candidate_activity(NeuralField& field, const GridMap& map, const Cell& current,
                          const Cell& candidate) {
    int cheb = 0;
    for (int i = 0; i < current.dims; ++i)
        cheb = std::max(cheb, std::abs(current.c[static_cast<size_t>(i)] -
                                       candidate.c[static_cast<size_t>(i)]));
    if (current.dims != candidate.dims || cheb != 1 || !map.in_bounds(candidate))
        throw std::invalid_argument("candidate " + candidate.str() +
                                    " is not a neighbor of " + current.str());
    const double from_current = field.activities[map.index(current)];
    const double attraction = std::exp(-euclidean_distance(candidate, field.destination));
    const double input = external_input(map, field, candidate);
    const double value = transfer(from_current + attraction + input, field.gain);
    field.activities[map.index(candidate)] = value;
    return value;
}

std::optional<Selection> select_next(NeuralField& field, const GridMap& map,
                                     const Cell& current) {
    if (!map.is_free(current))
        throw std::invalid_argument("current cell not free and in-bounds: " + current.str());
    std::optional<Selection> best;
    for (const Cell& candidate : map.neighbors(current)) {
        const double value = candidate_activity(field, map, current, candidate);
        if (map.is_obstacle(candidate)) continue;
        if (!best || value > best->activity) best = Selection{candidate, value};
    }
    return best;
}

PlanPath plan_bnnp(const GridMap& map, const Cell& origin, const Cell& destination,
                   double gain, int step_limit) {
    if (!map.is_free(origin))
        throw std::invalid_argument("origin must be a free in-bounds cell: " + origin.str());
    if (!map.is_free(destination))
        throw std::invalid_argument("destination must be a free in-bounds cell: " +
                                    destination.str());
    if (origin == destination)
        throw std::invalid_argument("origin and destination must be distinct");
    if (step_limit <= 0) step_limit = default_step_limit(map);

    NeuralField field(map, destination, gain);
    PlanPath plan;
    plan.waypoints.push_back(origin);
    field.visits[map.index(origin)] = 1;

    Cell current = origin;
    for (int step = 0; step < step_limit; ++step) {
        const auto next = select_next(field, map, current);
        if (!next) {
            plan.status = PlanStatus::trapped;
            return plan;
        }
        current = next->cell;
        plan.waypoints.push_back(current);
        std::uint8_t& count = field.visits[map.index(current)];
        if (count < 255) ++count;
        if (count >= 3) {
            plan.status = PlanStatus::trapped;
            return plan;
        }
        if (current == destination) {
            plan.status = PlanStatus::reached;
            return plan;
        }
    }
    plan.status = PlanStatus::step_limit;
    return plan;
}

}  // namespace uuvplan
