#include "uuvplan/grid_map.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

namespace uuvplan {

namespace {

std::size_t total_cells(const std::vector<int>& extent) {
    std::size_t n = 1;
    for (int e : extent) n *= static_cast<std::size_t>(e);
    return n;
}

void validate_extent(const std::vector<int>& extent) {
    if (extent.size() != 2 && extent.size() != 3)
        throw std::invalid_argument("extent must have 2 or 3 axes");
    for (int e : extent)
        if (e <= 0) throw std::invalid_argument("extent must be positive on each axis");
}

}  // namespace

GridMap::GridMap(std::vector<int> extent, const std::vector<Cell>& obstacles)
    : extent_(std::move(extent)) {
    validate_extent(extent_);
    occupancy_.assign(total_cells(extent_), 0);
    for (const Cell& c : obstacles) {
        if (c.dims != dims())
            throw std::invalid_argument("obstacle " + c.str() + " has arity " +
                                        std::to_string(c.dims) + ", map has " +
                                        std::to_string(dims()));
        if (!in_bounds(c))
            throw std::invalid_argument("obstacle " + c.str() + " outside map extent");
        std::uint8_t& slot = occupancy_[index(c)];
        if (!slot) {
            slot = 1;
            ++obstacle_count_;
        }
    }
}

bool GridMap::in_bounds(const Cell& cell) const {
    if (cell.dims != dims()) return false;
    for (int i = 0; i < dims(); ++i) {
        const int v = cell.c[static_cast<size_t>(i)];
        if (v < 0 || v >= extent_[static_cast<size_t>(i)]) return false;
    }
    return true;
}

bool GridMap::is_obstacle(const Cell& cell) const {
    if (!in_bounds(cell)) return false;
    return occupancy_[index(cell)] != 0;
}

std::size_t GridMap::index(const Cell& cell) const {
    std::size_t idx = 0;
    for (int i = dims() - 1; i >= 0; --i)
        idx = idx * static_cast<std::size_t>(extent_[static_cast<size_t>(i)]) +
              static_cast<std::size_t>(cell.c[static_cast<size_t>(i)]);
    return idx;
}

Cell GridMap::cell_at(std::size_t index) const {
    Cell c;
    c.dims = dims();
    for (int i = 0; i < dims(); ++i) {
        const auto e = static_cast<std::size_t>(extent_[static_cast<size_t>(i)]);
        c.c[static_cast<size_t>(i)] = static_cast<int>(index % e);
        index /= e;
    }
    return c;
}

std::vector<Cell> GridMap::neighbors(const Cell& cell) const {
    if (!in_bounds(cell))
        throw std::invalid_argument("neighbors query outside map: " + cell.str());
    std::vector<Cell> out;
    out.reserve(dims() == 2 ? 8 : 26);
    const int zlo = dims() == 3 ? -1 : 0;
    const int zhi = dims() == 3 ? 1 : 0;
    for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy)
            for (int dz = zlo; dz <= zhi; ++dz) {
                if (dx == 0 && dy == 0 && dz == 0) continue;
                Cell n = cell;
                n.c[0] += dx;
                n.c[1] += dy;
                n.c[2] += dz;
                if (in_bounds(n)) out.push_back(n);
            }
    return out;
}

std::vector<Cell> GridMap::obstacles() const {
    std::vector<Cell> out;
    out.reserve(obstacle_count_);
    for (std::size_t i = 0; i < occupancy_.size(); ++i)
        if (occupancy_[i]) out.push_back(cell_at(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::string GridMap::to_json() const {
    nlohmann::json j;
    j["dims"] = dims();
    j["extent"] = extent_;
    auto arr = nlohmann::json::array();
    for (const Cell& c : obstacles()) {
        std::vector<int> coords(c.c.begin(), c.c.begin() + dims());
        arr.push_back(coords);
    }
    j["obstacles"] = arr;
    return j.dump(2) + "\n";
}

GridMap GridMap::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const int dims = j.at("dims").get<int>();
    auto extent = j.at("extent").get<std::vector<int>>();
    if (static_cast<int>(extent.size()) != dims)
        throw std::invalid_argument("map file: extent arity does not match dims");
    std::vector<Cell> obstacles;
    for (const auto& item : j.at("obstacles")) {
        auto coords = item.get<std::vector<int>>();
        if (static_cast<int>(coords.size()) != dims)
            throw std::invalid_argument("map file: obstacle arity does not match dims");
        Cell c = dims == 2 ? Cell(coords[0], coords[1])
                           : Cell(coords[0], coords[1], coords[2]);
        obstacles.push_back(c);
    }
    return GridMap(std::move(extent), obstacles);
}

GridMap GridMap::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

void GridMap::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write map file: " + path);
    out << to_json();
}

GridMap generate_random_obstacles(std::vector<int> extent, double ratio,
                                  std::uint64_t seed,
                                  const std::vector<Cell>& protected_cells,
                                  ObstacleStyle style) {
    validate_extent(extent);
    if (ratio < 0.0 || ratio > 0.9)
        throw std::invalid_argument("obstacle ratio must be in [0, 0.9]");

    GridMap empty(extent, {});
    for (const Cell& c : protected_cells)
        if (!empty.in_bounds(c))
            throw std::invalid_argument("protected cell " + c.str() + " outside map extent");

    // Protected = the given cells plus their Chebyshev-1 neighborhoods.
    std::vector<std::uint8_t> blocked(empty.cell_count(), 0);
    for (const Cell& c : protected_cells) {
        blocked[empty.index(c)] = 1;
        for (const Cell& n : empty.neighbors(c)) blocked[empty.index(n)] = 1;
    }

    const std::size_t n_cells = empty.cell_count();
    const auto target = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n_cells)));

    std::vector<std::size_t> candidates;
    candidates.reserve(n_cells);
    for (std::size_t i = 0; i < n_cells; ++i)
        if (!blocked[i]) candidates.push_back(i);
    if (target > candidates.size())
        throw std::runtime_error("obstacle ratio too high: no room left around start/goal");

    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> occ(n_cells, 0);
    std::size_t placed = 0;

    if (style == ObstacleStyle::cells) {
        // Partial Fisher-Yates over the candidate list: first `target` picks.
        for (std::size_t k = 0; k < target; ++k) {
            std::uniform_int_distribution<std::size_t> pick(k, candidates.size() - 1);
            std::swap(candidates[k], candidates[pick(rng)]);
            occ[candidates[k]] = 1;
        }
        placed = target;
    } else {
        const int dims = empty.dims();
        std::uniform_int_distribution<int> side(1, 3);
        std::vector<std::uniform_int_distribution<int>> pos;
        for (int a = 0; a < dims; ++a)
            pos.emplace_back(0, extent[static_cast<size_t>(a)] - 1);
        // Stamp random rectangular blocks, then trim overshoot cell by cell.
        std::size_t attempts = 0;
        while (placed < target && attempts < 64 * n_cells) {
            ++attempts;
            Cell lo;
            lo.dims = dims;
            std::array<int, 3> len{1, 1, 1};
            for (int a = 0; a < dims; ++a) {
                lo.c[static_cast<size_t>(a)] = pos[static_cast<size_t>(a)](rng);
                len[static_cast<size_t>(a)] = side(rng);
            }
            for (int dx = 0; dx < len[0]; ++dx)
                for (int dy = 0; dy < len[1]; ++dy)
                    for (int dz = 0; dz < len[2]; ++dz) {
                        Cell c = lo;
                        c.c[0] += dx;
                        c.c[1] += dy;
                        c.c[2] += dz;
                        if (!empty.in_bounds(c)) continue;
                        const std::size_t idx = empty.index(c);
                        if (blocked[idx] || occ[idx]) continue;
                        occ[idx] = 1;
                        ++placed;
                    }
        }
        if (placed > target) {
            std::vector<std::size_t> filled;
            for (std::size_t i = 0; i < n_cells; ++i)
                if (occ[i]) filled.push_back(i);
            std::shuffle(filled.begin(), filled.end(), rng);
            while (placed > target) {
                occ[filled.back()] = 0;
                filled.pop_back();
                --placed;
            }
        }
        // Top up with single cells if block stamping stalled short of target.
        if (placed < target) {
            for (std::size_t i = 0; i < candidates.size() && placed < target; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
                std::swap(candidates[i], candidates[pick(rng)]);
                if (!occ[candidates[i]]) {
                    occ[candidates[i]] = 1;
                    ++placed;
                }
            }
        }
    }

    std::vector<Cell> cells;
    cells.reserve(placed);
    for (std::size_t i = 0; i < n_cells; ++i)
        if (occ[i]) cells.push_back(empty.cell_at(i));
    return GridMap(std::move(extent), cells);
}

}  // namespace uuvplan
