#include "uuvplan/geometry.hpp"

#include <algorithm>
#include <limits>

namespace uuvplan {

std::string Cell::str() const {
    std::string s = "(" + std::to_string(c[0]) + "," + std::to_string(c[1]);
    if (dims == 3) s += "," + std::to_string(c[2]);
    return s + ")";
}

double euclidean_distance(const Cell& a, const Cell& b) {
    if (a.dims != b.dims)
        throw std::invalid_argument("cell arity mismatch: " + a.str() + " vs " + b.str());
    double s = 0;
    for (int i = 0; i < a.dims; ++i) {
        const double d = a.c[static_cast<size_t>(i)] - b.c[static_cast<size_t>(i)];
        s += d * d;
    }
    return std::sqrt(s);
}

double point_segment_distance(const Vec& p, const Vec& a, const Vec& b) {
    const Vec ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return (p - a).norm();
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

double point_polyline_distance(const Vec& p, const std::vector<Cell>& waypoints) {
    if (waypoints.empty())
        throw std::invalid_argument("polyline needs at least one waypoint");
    if (waypoints.size() == 1) return (p - Vec::from_cell(waypoints[0])).norm();
    double best = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k + 1 < waypoints.size(); ++k) {
        best = std::min(best, point_segment_distance(p, Vec::from_cell(waypoints[k]),
                                                     Vec::from_cell(waypoints[k + 1])));
    }
    return best;
}

double path_length(const std::vector<Cell>& waypoints) {
    if (waypoints.size() < 2)
        throw std::invalid_argument("path length needs at least 2 points");
    double total = 0;
    for (size_t k = 0; k + 1 < waypoints.size(); ++k)
        total += euclidean_distance(waypoints[k], waypoints[k + 1]);
    return total;
}

double path_length(const std::vector<Vec>& points) {
    if (points.size() < 2)
        throw std::invalid_argument("path length needs at least 2 points");
    double total = 0;
    for (size_t k = 0; k + 1 < points.size(); ++k)
        total += (points[k + 1] - points[k]).norm();
    return total;
}

}  // namespace uuvplan
