#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "uuvplan/oracle.hpp"

using namespace uuvplan;

namespace {

// Independent reference: Gauss-Seidel value iteration over the grid graph,
// swept until no distance label changes. Shares no code path with the
// library's heap-based search.
double value_iteration_length(const GridMap& map, const Cell& origin,
                              const Cell& destination) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(map.cell_count(), inf);
    dist[map.index(origin)] = 0.0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < map.cell_count(); ++i) {
            const Cell c = map.cell_at(i);
            if (map.is_obstacle(c)) continue;
            for (const Cell& n : map.neighbors(c)) {
                if (map.is_obstacle(n)) continue;
                const double via = dist[map.index(n)] + euclidean_distance(c, n);
                if (via < dist[i] - 1e-15) {
                    dist[i] = via;
                    changed = true;
                }
            }
        }
    }
    return dist[map.index(destination)];
}

}  // namespace

TEST_CASE("frozen optimal lengths on the standard empty maps") {
    // Values computed with the value-iteration reference below and frozen.
    const double opt2d = 7.0 * std::sqrt(2.0) + 1.0; // 10.899494936611665
    const double opt3d = 7.0 * std::sqrt(3.0) + std::sqrt(2.0); // 13.538569215355236

    GridMap map2({10, 10}, {});
    const auto r2 = shortest_path(map2, Cell(2, 1), Cell(9, 9));
    CHECK(r2.length == doctest::Approx(10.899494936611665).epsilon(1e-12));
    CHECK(r2.length == doctest::Approx(opt2d));
    CHECK(value_iteration_length(map2, Cell(2, 1), Cell(9, 9)) ==
          doctest::Approx(opt2d).epsilon(1e-12));
    CHECK(count_steps(r2.path) == StepCounts{1, 7, 0});

    GridMap map3({10, 10, 10}, {});
    const auto r3 = shortest_path(map3, Cell(2, 1, 1), Cell(9, 9, 9));
    CHECK(r3.length == doctest::Approx(13.538569215355236).epsilon(1e-12));
    CHECK(r3.length == doctest::Approx(opt3d));
    CHECK(value_iteration_length(map3, Cell(2, 1, 1), Cell(9, 9, 9)) ==
          doctest::Approx(opt3d).epsilon(1e-12));
    CHECK(count_steps(r3.path) == StepCounts{0, 1, 7});
}

TEST_CASE("closed form matches the search on empty maps") {
    std::mt19937 rng(13);
    GridMap map2({14, 11}, {});
    GridMap map3({8, 9, 7}, {});
    for (int trial = 0; trial < 25; ++trial) {
        Cell a(int(rng() % 14), int(rng() % 11));
        Cell b(int(rng() % 14), int(rng() % 11));
        if (a == b) continue;
        const auto r = shortest_path(map2, a, b);
        CHECK(r.length == doctest::Approx(empty_map_optimal_length(a, b)).epsilon(1e-12));
        CHECK(count_steps(r.path) == empty_map_optimal_steps(a, b));
    }
    for (int trial = 0; trial < 25; ++trial) {
        Cell a(int(rng() % 8), int(rng() % 9), int(rng() % 7));
        Cell b(int(rng() % 8), int(rng() % 9), int(rng() % 7));
        if (a == b) continue;
        const auto r = shortest_path(map3, a, b);
        CHECK(r.length == doctest::Approx(empty_map_optimal_length(a, b)).epsilon(1e-12));
        CHECK(count_steps(r.path) == empty_map_optimal_steps(a, b));
    }
}

TEST_CASE("search agrees with value iteration on seeded obstacle maps") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Cell origin(0, 0), dest(11, 9);
        GridMap map =
            generate_random_obstacles({12, 10}, 0.25, seed, {origin, dest});
        const auto r = shortest_path(map, origin, dest);
        const double vi = value_iteration_length(map, origin, dest);
        if (std::isinf(vi)) {
            CHECK_FALSE(r.reachable());
        } else {
            CHECK(r.length == doctest::Approx(vi).epsilon(1e-12));
            CHECK(path_length(r.path) == doctest::Approx(r.length).epsilon(1e-12));
            for (const Cell& c : r.path) CHECK_FALSE(map.is_obstacle(c));
        }
    }
}

TEST_CASE("sealed origin is unreachable") {
    std::vector<Cell> wall;
    for (const Cell& n : GridMap({6, 6}, {}).neighbors(Cell(0, 0))) wall.push_back(n);
    GridMap map({6, 6}, wall);
    const auto r = shortest_path(map, Cell(0, 0), Cell(5, 5));
    CHECK_FALSE(r.reachable());
    CHECK(std::isinf(r.length));
}

TEST_CASE("triangle sanity: never shorter than the straight line") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Cell origin(1, 1), dest(10, 8);
        GridMap map = generate_random_obstacles({12, 10}, 0.2, rng(), {origin, dest});
        const auto r = shortest_path(map, origin, dest);
        if (r.reachable())
            CHECK(r.length >= euclidean_distance(origin, dest) - 1e-12);
    }
}

TEST_CASE("oracle rejects occupied endpoints") {
    GridMap map({5, 5}, {Cell(2, 2)});
    CHECK_THROWS_AS(shortest_path(map, Cell(2, 2), Cell(4, 4)), std::invalid_argument);
    CHECK_THROWS_AS(shortest_path(map, Cell(0, 0), Cell(2, 2)), std::invalid_argument);
}
