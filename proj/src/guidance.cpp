#include "uuvplan/guidance.hpp"

namespace uuvplan {

Vec desired_velocity(const Cell& from, const Cell& to, double speed) {
    if (from == to)
        throw std::invalid_argument("desired velocity needs a nonzero displacement");
    int cheb = 0;
    for (int i = 0; i < from.dims; ++i)
        cheb = std::max(cheb, std::abs(from.c[static_cast<size_t>(i)] -
                                       to.c[static_cast<size_t>(i)]));
    if (from.dims != to.dims || cheb != 1)
        throw std::invalid_argument("desired velocity target " + to.str() +
                                    " is not a neighbor of " + from.str());
    Vec dir = Vec::from_cell(to) - Vec::from_cell(from);
    return (speed / dir.norm()) * dir;
}

Vec compensate(const Vec& desired, const Vec& current) {
    return desired - current;
}

Feasibility feasibility_check(const Vec& commanded, double v_max) {
    if (v_max <= 0.0) throw std::invalid_argument("v_max must be positive");
    return commanded.norm() <= v_max ? Feasibility::feasible : Feasibility::saturated;
}

CbnnpPlan plan_cbnnp(const GridMap& map, const Cell& origin, const Cell& destination,
                     double gain, const CurrentSpec& current, double speed) {
    if (speed <= 0.0) throw std::invalid_argument("desired speed must be positive");
    if (current.dims() != map.dims())
        throw std::invalid_argument("current spec arity does not match the map");
    CbnnpPlan out;
    out.path = plan_bnnp(map, origin, destination, gain);

    double t = 0.0;
    const auto& wp = out.path.waypoints;
    out.schedule.reserve(wp.size() > 0 ? wp.size() - 1 : 0);
    for (std::size_t k = 0; k + 1 < wp.size(); ++k) {
        VelocityTriple triple;
        triple.desired = desired_velocity(wp[k], wp[k + 1], speed);
        triple.current = sample_current(current, Vec::from_cell(wp[k]), t);
        triple.commanded = compensate(triple.desired, triple.current);
        out.schedule.push_back(triple);
        t += euclidean_distance(wp[k], wp[k + 1]) / speed;
    }
    return out;
}

}  // namespace uuvplan
