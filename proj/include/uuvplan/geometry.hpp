#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace uuvplan {

// Integer grid coordinate, 2 or 3 components. Unused components stay 0 so
// comparison and hashing work uniformly.
struct Cell {
    std::array<int, 3> c{0, 0, 0};
    int dims = 2;

    Cell() = default;
    Cell(int x, int y) : c{x, y, 0}, dims(2) {}
    Cell(int x, int y, int z) : c{x, y, z}, dims(3) {}

    int x() const { return c[0]; }
    int y() const { return c[1]; }
    int z() const { return c[2]; }

    friend bool operator==(const Cell& a, const Cell& b) {
        return a.dims == b.dims && a.c == b.c;
    }
    friend auto operator<=>(const Cell& a, const Cell& b) {
        if (auto cmp = a.dims <=> b.dims; cmp != 0) return cmp;
        return a.c <=> b.c;
    }

    std::string str() const;
};

// Small fixed-size velocity / position vector in meters (2 or 3 components).
struct Vec {
    std::array<double, 3> v{0.0, 0.0, 0.0};
    int dims = 2;

    Vec() = default;
    Vec(double x, double y) : v{x, y, 0.0}, dims(2) {}
    Vec(double x, double y, double z) : v{x, y, z}, dims(3) {}

    static Vec zero(int dims) { return dims == 2 ? Vec(0, 0) : Vec(0, 0, 0); }
    static Vec from_cell(const Cell& c) {
        return c.dims == 2 ? Vec(c.x(), c.y())
                           : Vec(c.x(), c.y(), c.z());
    }

    double x() const { return v[0]; }
    double y() const { return v[1]; }
    double z() const { return v[2]; }
    double operator[](int i) const { return v[static_cast<size_t>(i)]; }
    double& operator[](int i) { return v[static_cast<size_t>(i)]; }

    friend bool operator==(const Vec& a, const Vec& b) {
        return a.dims == b.dims && a.v == b.v;
    }

    friend Vec operator+(Vec a, const Vec& b) {
        require_same_dims(a, b);
        for (int i = 0; i < a.dims; ++i) a.v[static_cast<size_t>(i)] += b.v[static_cast<size_t>(i)];
        return a;
    }
    friend Vec operator-(Vec a, const Vec& b) {
        require_same_dims(a, b);
        for (int i = 0; i < a.dims; ++i) a.v[static_cast<size_t>(i)] -= b.v[static_cast<size_t>(i)];
        return a;
    }
    friend Vec operator*(double s, Vec a) {
        for (int i = 0; i < a.dims; ++i) a.v[static_cast<size_t>(i)] *= s;
        return a;
    }

    double norm() const {
        double s = 0;
        for (int i = 0; i < dims; ++i) s += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
        return std::sqrt(s);
    }

    static void require_same_dims(const Vec& a, const Vec& b) {
        if (a.dims != b.dims)
            throw std::invalid_argument("vector arity mismatch: " +
                                        std::to_string(a.dims) + " vs " +
                                        std::to_string(b.dims));
    }
};

inline double dot(const Vec& a, const Vec& b) {
    Vec::require_same_dims(a, b);
    double s = 0;
    for (int i = 0; i < a.dims; ++i) s += a[i] * b[i];
    return s;
}

// Magnitude of the cross product; measures how far b strays from the line of a.
inline double cross_norm(const Vec& a, const Vec& b) {
    Vec::require_same_dims(a, b);
    if (a.dims == 2) return std::abs(a.x() * b.y() - a.y() * b.x());
    const double cx = a.y() * b.z() - a.z() * b.y();
    const double cy = a.z() * b.x() - a.x() * b.z();
    const double cz = a.x() * b.y() - a.y() * b.x();
    return std::sqrt(cx * cx + cy * cy + cz * cz);
}

// Euclidean distance between cell centers, in meters (cell side = 1 m).
double euclidean_distance(const Cell& a, const Cell& b);

// Distance from a point to the closed segment [a, b].
double point_segment_distance(const Vec& p, const Vec& a, const Vec& b);

// Distance from a point to a polyline given by cell-center waypoints.
double point_polyline_distance(const Vec& p, const std::vector<Cell>& waypoints);

// Sum of Euclidean segment lengths. Throws if fewer than 2 points.
double path_length(const std::vector<Cell>& waypoints);
double path_length(const std::vector<Vec>& points);

}  // namespace uuvplan
