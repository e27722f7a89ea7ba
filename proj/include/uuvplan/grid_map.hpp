#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uuvplan/geometry.hpp"

namespace uuvplan {

/// Occupancy model of the environment: a 2D or 3D grid of unit cells,
/// each either free or fully occupied by an obstacle. Cell (x,y[,z]) is the
/// unit cube centered at the integer coordinates, so the map's continuous
/// domain spans [-0.5, extent-0.5) per axis. Immutable after construction
/// and safe to share across concurrent runs.
class GridMap {
public:
    GridMap(std::vector<int> extent, const std::vector<Cell>& obstacles);

    int dims() const { return static_cast<int>(extent_.size()); }
    const std::vector<int>& extent() const { return extent_; }
    std::size_t cell_count() const { return occupancy_.size(); }
    std::size_t obstacle_count() const { return obstacle_count_; }

    bool in_bounds(const Cell& cell) const;
    bool is_obstacle(const Cell& cell) const;
    bool is_free(const Cell& cell) const { return in_bounds(cell) && !is_obstacle(cell); }

    /// Flat storage index; caller guarantees the cell is in bounds.
    std::size_t index(const Cell& cell) const;
    Cell cell_at(std::size_t index) const;

    /// All in-bounds cells at Chebyshev distance 1 (8 in a 2D interior,
    /// 26 in a 3D interior, fewer at boundaries). Order is fixed:
    /// lexicographic by coordinate offset, stable across runs.
    std::vector<Cell> neighbors(const Cell& cell) const;

    std::vector<Cell> obstacles() const;

    std::string to_json() const;
    static GridMap from_json(const std::string& text);
    static GridMap load(const std::string& path);
    void save(const std::string& path) const;

private:
    std::vector<int> extent_;
    std::vector<std::uint8_t> occupancy_;
    std::size_t obstacle_count_ = 0;
};

enum class ObstacleStyle { cells, blocks };

/// Seeded random obstacle placement. The obstacle fraction lands within
/// +-2% of `ratio`; the start and goal cells and their Chebyshev-1
/// neighborhoods are never occupied. Identical arguments give identical maps.
GridMap generate_random_obstacles(std::vector<int> extent, double ratio,
                                  std::uint64_t seed,
                                  const std::vector<Cell>& protected_cells,
                                  ObstacleStyle style = ObstacleStyle::cells);

}  // namespace uuvplan
