#include "uuvplan/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace uuvplan {

OracleResult shortest_path(const GridMap& map, const Cell& origin, const Cell& destination) {
    if (!map.is_free(origin))
        throw std::invalid_argument("oracle origin not a free in-bounds cell: " + origin.str());
    if (!map.is_free(destination))
        throw std::invalid_argument("oracle destination not a free in-bounds cell: " +
                                    destination.str());

    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t n = map.cell_count();
    std::vector<double> dist(n, inf);
    std::vector<std::size_t> pred(n, n);
    std::vector<std::uint8_t> done(n, 0);

    using QItem = std::pair<double, std::size_t>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;

    const std::size_t src = map.index(origin);
    const std::size_t dst = map.index(destination);
    dist[src] = 0.0;
    queue.emplace(0.0, src);

    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (done[u]) continue;
        done[u] = 1;
        if (u == dst) break;
        const Cell cu = map.cell_at(u);
        for (const Cell& cv : map.neighbors(cu)) {
            if (map.is_obstacle(cv)) continue;
            const std::size_t v = map.index(cv);
            if (done[v]) continue;
            const double nd = d + euclidean_distance(cu, cv);
            if (nd < dist[v]) {
                dist[v] = nd;
                pred[v] = u;
                queue.emplace(nd, v);
            } else if (nd == dist[v] && pred[v] < n && cu < map.cell_at(pred[v])) {
                pred[v] = u;
            }
        }
    }

    OracleResult result;
    if (dist[dst] == inf) {
        result.length = inf;
        return result;
    }
    result.length = dist[dst];
    for (std::size_t v = dst;; v = pred[v]) {
        result.path.push_back(map.cell_at(v));
        if (v == src) break;
    }
    std::reverse(result.path.begin(), result.path.end());
    return result;
}

namespace {

std::array<int, 3> sorted_abs_deltas(const Cell& a, const Cell& b) {
    if (a.dims != b.dims)
        throw std::invalid_argument("cell arity mismatch: " + a.str() + " vs " + b.str());
    std::array<int, 3> d{0, 0, 0};
    for (int i = 0; i < a.dims; ++i)
        d[static_cast<size_t>(i)] = std::abs(a.c[static_cast<size_t>(i)] - b.c[static_cast<size_t>(i)]);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

double empty_map_optimal_length(const Cell& origin, const Cell& destination) {
    const auto s = empty_map_optimal_steps(origin, destination);
    return s.straight + s.face_diagonal * std::sqrt(2.0) + s.space_diagonal * std::sqrt(3.0);
}

StepCounts empty_map_optimal_steps(const Cell& origin, const Cell& destination) {
    const auto d = sorted_abs_deltas(origin, destination);
    StepCounts s;
    if (origin.dims == 2) {
        // d[0] is the padding zero in 2D.
        s.straight = d[2] - d[1];
        s.face_diagonal = d[1];
    } else {
        s.straight = d[2] - d[1];
        s.face_diagonal = d[1] - d[0];
        s.space_diagonal = d[0];
    }
    return s;
}

StepCounts count_steps(const std::vector<Cell>& path) {
    StepCounts s;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        int moved = 0;
        for (int i = 0; i < path[k].dims; ++i)
            moved += path[k].c[static_cast<size_t>(i)] != path[k + 1].c[static_cast<size_t>(i)];
        if (moved == 1)
            ++s.straight;
        else if (moved == 2)
            ++s.face_diagonal;
        else if (moved == 3)
            ++s.space_diagonal;
        else
            throw std::invalid_argument("path contains a non-neighbor step");
    }
    return s;
}

}  // namespace uuvplan
