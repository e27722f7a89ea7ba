#pragma once

#include <vector>

#include "uuvplan/geometry.hpp"
#include "uuvplan/grid_map.hpp"

namespace uuvplan {

/// Exact shortest-path reference over the 8-/26-connected grid graph with
/// Euclidean edge weights (1, sqrt(2), sqrt(3)). `length` is infinity when
/// the destination is unreachable; `path` is then empty.
struct OracleResult {
    double length = 0.0;
    std::vector<Cell> path;

    bool reachable() const { return !path.empty(); }
};

/// Dijkstra with deterministic tie-breaking (equal-length relaxations keep
/// the lexicographically smallest predecessor). Diagonal moves between two
/// free cells are allowed even when the shared orthogonal neighbors are
/// obstacles, matching the planner's neighbor rule.
OracleResult shortest_path(const GridMap& map, const Cell& origin, const Cell& destination);

/// Closed-form optimum on obstacle-free maps: with per-axis displacements
/// sorted ascending, 2D gives (M-m) + m*sqrt(2) and 3D gives
/// (c-b) + (b-a)*sqrt(2) + a*sqrt(3).
double empty_map_optimal_length(const Cell& origin, const Cell& destination);

/// Per-type step counts of a grid path: straight moves, face diagonals,
/// space diagonals. Used for exact (symbolic) optimality comparison.
struct StepCounts {
    int straight = 0;
    int face_diagonal = 0;
    int space_diagonal = 0;

    friend bool operator==(const StepCounts&, const StepCounts&) = default;
};

StepCounts count_steps(const std::vector<Cell>& path);

/// Step composition of the optimal path on an obstacle-free map.
StepCounts empty_map_optimal_steps(const Cell& origin, const Cell& destination);

}  // namespace uuvplan
