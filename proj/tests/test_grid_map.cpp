#include <doctest.h>

#include <random>
#include <set>

#include "uuvplan/grid_map.hpp"

using namespace uuvplan;

TEST_CASE("build_map marks exactly the listed obstacles") {
    GridMap empty({10, 10}, {});
    CHECK(empty.cell_count() == 100);
    CHECK(empty.obstacle_count() == 0);

    GridMap cube({10, 10, 10}, {Cell(5, 5, 5)});
    CHECK(cube.is_obstacle(Cell(5, 5, 5)));
    CHECK_FALSE(cube.is_obstacle(Cell(5, 5, 4)));
    CHECK(cube.obstacle_count() == 1);
}

TEST_CASE("build_map rejects out-of-range obstacles with the coordinate named") {
    CHECK_THROWS_WITH_AS(GridMap({10, 10}, {Cell(11, 0)}),
                         doctest::Contains("(11,0)"), std::invalid_argument);
    CHECK_THROWS_AS(GridMap({10, 10}, {Cell(0, -1)}), std::invalid_argument);
    CHECK_THROWS_AS(GridMap({10, 10}, {Cell(1, 1, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(GridMap({0, 10}, {}), std::invalid_argument);
}

TEST_CASE("neighbors counts and ordering") {
    GridMap map2({10, 10}, {});
    const auto mid = map2.neighbors(Cell(5, 5));
    CHECK(mid.size() == 8);
    // Lexicographic by offset: first (-1,-1), last (1,1).
    CHECK(mid.front() == Cell(4, 4));
    CHECK(mid.back() == Cell(6, 6));
    CHECK(std::is_sorted(mid.begin(), mid.end()));

    const auto corner = map2.neighbors(Cell(0, 0));
    CHECK(corner.size() == 3);

    GridMap map3({10, 10, 10}, {});
    CHECK(map3.neighbors(Cell(2, 2, 2)).size() == 26);
    CHECK(map3.neighbors(Cell(0, 0, 0)).size() == 7);
}

TEST_CASE("neighbors property: in bounds, distinct, Chebyshev distance 1") {
    std::mt19937 rng(7);
    GridMap map({9, 7, 5}, {});
    for (int trial = 0; trial < 200; ++trial) {
        Cell c(int(rng() % 9), int(rng() % 7), int(rng() % 5));
        const auto ns = map.neighbors(c);
        bool interior = true;
        for (int i = 0; i < 3; ++i)
            interior = interior && c.c[size_t(i)] > 0 &&
                       c.c[size_t(i)] < map.extent()[size_t(i)] - 1;
        if (interior) CHECK(ns.size() == 26);
        for (const Cell& n : ns) {
            CHECK(map.in_bounds(n));
            CHECK_FALSE(n == c);
            int cheb = 0;
            for (int i = 0; i < 3; ++i)
                cheb = std::max(cheb, std::abs(n.c[size_t(i)] - c.c[size_t(i)]));
            CHECK(cheb == 1);
        }
    }
}

TEST_CASE("euclidean_distance") {
    CHECK(euclidean_distance(Cell(0, 0), Cell(3, 4)) == doctest::Approx(5.0));
    CHECK(euclidean_distance(Cell(2, 1, 1), Cell(9, 9, 9)) ==
          doctest::Approx(13.3041).epsilon(1e-4));
    CHECK(euclidean_distance(Cell(4, 2), Cell(4, 2)) == 0.0);
    CHECK_THROWS_AS(euclidean_distance(Cell(0, 0), Cell(0, 0, 0)),
                    std::invalid_argument);
}

TEST_CASE("random obstacles: ratio zero, count tolerance, determinism") {
    const std::vector<Cell> protect{Cell(2, 1), Cell(9, 9)};
    GridMap none = generate_random_obstacles({10, 10}, 0.0, 3, protect);
    CHECK(none.obstacle_count() == 0);

    GridMap some = generate_random_obstacles({10, 10}, 0.2, 3, protect);
    CHECK(some.obstacle_count() >= 18);
    CHECK(some.obstacle_count() <= 22);

    GridMap again = generate_random_obstacles({10, 10}, 0.2, 3, protect);
    CHECK(some.obstacles() == again.obstacles());

    GridMap other = generate_random_obstacles({10, 10}, 0.2, 4, protect);
    CHECK(some.obstacles() != other.obstacles());
}

TEST_CASE("random obstacles never touch the protected neighborhoods") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        for (ObstacleStyle style : {ObstacleStyle::cells, ObstacleStyle::blocks}) {
            const Cell start(2, 1), goal(9, 9);
            GridMap map = generate_random_obstacles({10, 10}, 0.6, seed, {start, goal},
                                                    style);
            CHECK_FALSE(map.is_obstacle(start));
            CHECK_FALSE(map.is_obstacle(goal));
            for (const Cell& n : map.neighbors(start)) CHECK_FALSE(map.is_obstacle(n));
            for (const Cell& n : map.neighbors(goal)) CHECK_FALSE(map.is_obstacle(n));
        }
    }
}

TEST_CASE("random obstacles: block style hits the requested ratio") {
    GridMap map = generate_random_obstacles({20, 20}, 0.3, 11, {Cell(0, 0), Cell(19, 19)},
                                            ObstacleStyle::blocks);
    CHECK(std::abs(double(map.obstacle_count()) / 400.0 - 0.3) <= 0.02);
}

TEST_CASE("random obstacles: impossible ratio reports an error") {
    // 3x3 map with a protected center: every cell is in the neighborhood.
    CHECK_THROWS(generate_random_obstacles({3, 3}, 0.9, 1, {Cell(1, 1)}));
}

TEST_CASE("map json round trip preserves occupancy") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        GridMap map = generate_random_obstacles({7, 9}, 0.25, rng(), {Cell(0, 0)});
        GridMap back = GridMap::from_json(map.to_json());
        CHECK(back.dims() == map.dims());
        CHECK(back.extent() == map.extent());
        CHECK(back.obstacles() == map.obstacles());
    }
}
