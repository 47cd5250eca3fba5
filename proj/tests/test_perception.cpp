#include "doctest.h"

#include "arx/perception.hpp"
#include "arx/presets.hpp"
#include "arx/stylobate.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace arx;

namespace {

FittedCurve east_platform_arc() {
    ParabolicArc arc = side_arc(presets::parthenon_surface(), Side::east);
    std::vector<Sample1D> pts;
    for (int i = 0; i <= 30; ++i) {
        double s = arc.length * i / 30.0;
        pts.push_back({s, arc.eval(s)});
    }
    return fit_curve(CurveFamily::parabola, pts);
}

} // namespace

TEST_SUITE("perception") {

TEST_CASE("angular thresholds convert to radians") {
    CHECK(AngularThreshold{3600.0}.radians() ==
          doctest::Approx(3.14159265358979323846 / 180.0).epsilon(1e-13));
    CHECK(thresholds::conservative_max.arcsec == 420.0);
    CHECK(thresholds::hyperacuity_min.arcsec == 3.0);
}

TEST_CASE("critical sagitta at the quoted distances") {
    CHECK(critical_sagitta(25.0, thresholds::conservative_min) ==
          doctest::Approx(0.0145444120742051).epsilon(1e-12));
    CHECK(critical_sagitta(25.0, thresholds::conservative_max) ==
          doctest::Approx(0.0509055068710118).epsilon(1e-12));
    CHECK(critical_sagitta(50.0, thresholds::conservative_min) ==
          doctest::Approx(0.0290888241484102).epsilon(1e-12));
    CHECK(critical_sagitta(60.0, thresholds::conservative_max) ==
          doctest::Approx(0.122173216490428).epsilon(1e-12));
}

TEST_CASE("critical sagitta scales linearly with distance") {
    for (double D : {10.0, 35.0, 80.0})
        CHECK(critical_sagitta(2.0 * D, thresholds::conservative_min) ==
              doctest::Approx(2.0 * critical_sagitta(D, thresholds::conservative_min))
                  .epsilon(1e-13));
    CHECK_THROWS_AS(critical_sagitta(0.0, thresholds::conservative_min), std::invalid_argument);
    CHECK_THROWS_AS(critical_sagitta(25.0, AngularThreshold{0.0}), std::invalid_argument);
}

TEST_CASE("platform bow detectability by distance") {
    FittedCurve east = east_platform_arc();

    Detectability near = is_detectable(east, 25.0, thresholds::conservative_max);
    CHECK(near.detectable);
    CHECK(near.margin == doctest::Approx(0.0179763961489882).epsilon(1e-9));

    Detectability far = is_detectable(east, 60.0, thresholds::conservative_max);
    CHECK_FALSE(far.detectable);
    CHECK(far.margin == doctest::Approx(-0.0532913134704283).epsilon(1e-9));
}

TEST_CASE("detectability is monotone in distance") {
    FittedCurve east = east_platform_arc();
    double prev = 1e9;
    for (double D : {10.0, 20.0, 40.0, 80.0, 160.0}) {
        double m = is_detectable(east, D, thresholds::conservative_max).margin;
        CHECK(m < prev);
        prev = m;
    }
}

TEST_CASE("a flat profile is never detectable") {
    std::vector<Sample1D> pts;
    for (int i = 0; i <= 10; ++i)
        pts.push_back({3.0 * i, 2.0});
    FittedCurve flat = fit_curve(CurveFamily::parabola, pts);
    Detectability d = is_detectable(flat, 25.0, thresholds::conservative_min);
    CHECK_FALSE(d.detectable);
    CHECK(d.margin == doctest::Approx(-critical_sagitta(25.0, thresholds::conservative_min))
                          .epsilon(1e-9));
}

TEST_CASE("visual angle basics") {
    double d = 7.0;
    double h = 2.0 * d * std::tan(15.0 * 3.14159265358979323846 / 180.0);
    CHECK(visual_angle(h, d) ==
          doctest::Approx(30.0 * 3.14159265358979323846 / 180.0).epsilon(1e-13));
    CHECK(visual_angle(1.0, 1000.0) == doctest::Approx(0.001).epsilon(1e-6));
    CHECK(visual_angle(2.0, 50.0) == doctest::Approx(visual_angle(4.0, 100.0)).epsilon(1e-13));
    CHECK_THROWS_AS(visual_angle(0.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(visual_angle(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("letter height needed at elevation") {
    double theta = visual_angle(1.0, 1.0);
    SUBCASE("frozen example") {
        double thirty_arcmin = AngularThreshold{1800.0}.radians();
        CHECK(scaled_letter_height(20.0, 10.0, thirty_arcmin) ==
              doctest::Approx(0.195134980895364).epsilon(1e-12));
    }
    SUBCASE("at eye level it reduces to the chord of the angle") {
        CHECK(scaled_letter_height(0.0, 12.0, theta) ==
              doctest::Approx(2.0 * 12.0 * std::tan(theta / 2.0)).epsilon(1e-12));
    }
    SUBCASE("round trip through the visual angle") {
        double h = scaled_letter_height(20.0, 10.0, theta);
        CHECK(visual_angle(h, std::hypot(20.0, 10.0)) == doctest::Approx(theta).epsilon(1e-12));
    }
    SUBCASE("rejects out-of-range angles") {
        CHECK_THROWS_AS(scaled_letter_height(20.0, 10.0, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(scaled_letter_height(20.0, 10.0, 3.2), std::invalid_argument);
        CHECK_THROWS_AS(scaled_letter_height(20.0, 0.0, theta), std::invalid_argument);
    }
}

TEST_CASE("equalization distance recovers a constructed crossing") {
    PlacedText row1{2.0, 1.0, 0.0};
    PlacedText row2{10.0, 1.1124853987249621, 0.0};
    EqualizeResult r = equalization_distance(row1, row2);
    REQUIRE(r.status == EqualizeStatus::unique);
    CHECK(r.distance == doctest::Approx(20.0).epsilon(1e-6));

    double a1 = visual_angle(row1.h, std::hypot(row1.H, r.distance));
    double a2 = visual_angle(row2.h, std::hypot(row2.H, r.distance));
    CHECK(a1 == doctest::Approx(a2).epsilon(1e-9));
}

TEST_CASE("identical rows subtend equally from everywhere") {
    PlacedText row1{2.0, 0.6, 0.0};
    PlacedText row2{-2.0, 0.6, 0.0};
    CHECK(equalization_distance(row1, row2).status == EqualizeStatus::every_distance);
}

TEST_CASE("equal letters at different elevations never equalize") {
    PlacedText row1{2.0, 0.6, 0.0};
    PlacedText row2{10.0, 0.6, 0.0};
    CHECK(equalization_distance(row1, row2).status == EqualizeStatus::none);
    CHECK_THROWS_AS(equalization_distance({2.0, 0.0, 0.0}, row2), std::invalid_argument);
}

TEST_CASE("the constructed crossing is the only sign change") {
    PlacedText row1{2.0, 1.0, 0.0};
    PlacedText row2{10.0, 1.1124853987249621, 0.0};
    auto gap = [&](double D) {
        return visual_angle(row1.h, std::hypot(row1.H, D)) -
               visual_angle(row2.h, std::hypot(row2.H, D));
    };
    int changes = 0;
    double prev = gap(1e-3);
    for (int k = 1; k <= 400; ++k) {
        double D = 1e-3 * std::pow(1e9, k / 400.0);
        double cur = gap(D);
        if ((prev < 0.0) != (cur < 0.0)) ++changes;
        prev = cur;
    }
    CHECK(changes == 1);
}

TEST_CASE("convergence height of tilted verticals") {
    CHECK(tilt_convergence_height(13.5, 0.4) == doctest::Approx(1933.70114253791).epsilon(1e-12));
    CHECK(tilt_convergence_height(14.45, 0.4) == doctest::Approx(2069.77640812391).epsilon(1e-12));
    CHECK(tilt_convergence_height(15.4, 0.4) == doctest::Approx(2205.85167370992).epsilon(1e-12));
    CHECK(tilt_convergence_height(15.5, 0.4) == doctest::Approx(2220.17538587686).epsilon(1e-12));
    CHECK(tilt_convergence_height(7.0, 45.0) == doctest::Approx(7.0).epsilon(1e-12));
    CHECK_THROWS_AS(tilt_convergence_height(0.0, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(tilt_convergence_height(14.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tilt_convergence_height(14.0, 90.0), std::invalid_argument);
}

TEST_CASE("halving the tilt roughly doubles the height") {
    double h1 = tilt_convergence_height(14.45, 0.4);
    double h2 = tilt_convergence_height(14.45, 0.2);
    CHECK(h2 / h1 == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("proportion canon anchors and clamping") {
    CHECK(expected_bhr(180.0) == 8.0);
    CHECK(expected_bhr(165.0) == 7.5);
    CHECK(expected_bhr(172.5) == doctest::Approx(7.75).epsilon(1e-13));
    CHECK(expected_bhr(150.0) == 7.5);
    CHECK(expected_bhr(205.0) == 8.0);
    double prev = 0.0;
    for (double cm = 140.0; cm <= 210.0; cm += 2.5) {
        double v = expected_bhr(cm);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK_THROWS_AS(expected_bhr(139.9), std::domain_error);
    CHECK_THROWS_AS(expected_bhr(210.1), std::domain_error);
}

} // TEST_SUITE
