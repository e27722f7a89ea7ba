#include <doctest.h>

#include <cmath>

#include "uuvplan/current_field.hpp"

using namespace uuvplan;

TEST_CASE("static 2D currents") {
    const Vec east = sample_current(CurrentSpec::static_2d(0.05, 0.0), Vec(0, 0), 0.0);
    CHECK(east.x() == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(east.y() == doctest::Approx(0.0).scale(1));

    const Vec north = sample_current(CurrentSpec::static_2d(0.5, 90.0), Vec(3, 3), 7.0);
    CHECK(north.x() == doctest::Approx(0.0).scale(1));
    CHECK(north.y() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("static 3D spherical decomposition") {
    const Vec v = sample_current(CurrentSpec::static_3d(0.05, 45.0, 0.0), Vec(0, 0, 0), 0.0);
    CHECK(v.x() == doctest::Approx(0.05 * std::sqrt(2.0) / 2.0).epsilon(1e-10));
    CHECK(v.y() == doctest::Approx(0.0).scale(1));
    CHECK(v.z() == doctest::Approx(0.05 * std::sqrt(2.0) / 2.0).epsilon(1e-10));
}

TEST_CASE("static magnitude equals the configured speed exactly") {
    for (double theta : {0.0, 17.0, 45.0, 90.0, 133.0, 180.0, 267.5}) {
        const Vec v = sample_current(CurrentSpec::static_2d(0.37, theta), Vec(1, 2), 5.0);
        CHECK(std::abs(v.norm() - 0.37) <= 1e-12);
    }
    for (double el : {0.0, 45.0, 90.0, 135.0, 180.0})
        for (double az : {0.0, 45.0, 120.0}) {
            const Vec v =
                sample_current(CurrentSpec::static_3d(0.81, el, az), Vec(0, 0, 0), 2.0);
            CHECK(std::abs(v.norm() - 0.81) <= 1e-12);
        }
}

TEST_CASE("dynamic current: clamped speed, periodicity, static degenerate case") {
    CurrentSpec spec = CurrentSpec::dynamic_default();

    for (double t = 0.0; t <= 120.0; t += 0.37)
        CHECK(sample_current(spec, Vec(0, 0), t).norm() >= 0.0);

    // Angle period 20 s, speed period 15 s: common period 60 s.
    for (double t = 0.0; t <= 60.0; t += 1.7) {
        const Vec a = sample_current(spec, Vec(0, 0), t);
        const Vec b = sample_current(spec, Vec(0, 0), t + 60.0);
        CHECK((a - b).norm() <= 1e-9);
    }

    // A deep trough: base 0.3 with amplitude 0.4 must clamp at zero.
    CurrentSpec deep = spec;
    deep.speed_amplitude = 0.4;
    double min_speed = 1e9;
    for (double t = 0.0; t <= 30.0; t += 0.01)
        min_speed = std::min(min_speed, sample_current(deep, Vec(0, 0), t).norm());
    CHECK(min_speed == doctest::Approx(0.0).scale(1));

    // Zero amplitudes reduce to the static case.
    CurrentSpec flat = spec;
    flat.angle_amplitude_deg = 0.0;
    flat.speed_amplitude = 0.0;
    flat.base_angle_deg = 30.0;
    const Vec expect = sample_current(CurrentSpec::static_2d(flat.speed, 30.0), Vec(0, 0), 0.0);
    for (double t : {0.0, 3.3, 12.0}) {
        const Vec v = sample_current(flat, Vec(0, 0), t);
        CHECK((v - expect).norm() <= 1e-12);
    }
}

TEST_CASE("sampling validates its inputs") {
    CHECK_THROWS_AS(sample_current(CurrentSpec::static_2d(-0.1, 0.0), Vec(0, 0), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample_current(CurrentSpec::static_2d(0.1, 0.0), Vec(0, 0), -1.0),
                    std::invalid_argument);
}

TEST_CASE("kind names round trip") {
    for (CurrentKind k :
         {CurrentKind::static2d, CurrentKind::static3d, CurrentKind::dynamic2d})
        CHECK(current_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(current_kind_from_string("vortex"), std::invalid_argument);
}
