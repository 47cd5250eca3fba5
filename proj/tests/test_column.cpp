#include "doctest.h"

#include "arx/column.hpp"
#include "arx/presets.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

using namespace arx;

TEST_SUITE("column") {

TEST_CASE("tapering law evaluates along the shaft") {
    ColumnProfile p = presets::penrose_profile();
    CHECK(radius_at(p, 0.0) == doctest::Approx(0.954753).epsilon(1e-13));
    CHECK(radius_at(p, 5.02) == doctest::Approx(0.8601794616948).epsilon(1e-12));
    CHECK(radius_at(p, 10.04) == doctest::Approx(0.7294804947792).epsilon(1e-12));
}

TEST_CASE("heights outside the shaft are rejected") {
    ColumnProfile p = presets::penrose_profile();
    CHECK_THROWS_AS(radius_at(p, -0.01), std::out_of_range);
    CHECK_THROWS_AS(radius_at(p, p.h + 0.01), std::out_of_range);
    ColumnProfile flat{1.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(radius_at(flat, 0.0), std::invalid_argument);
}

TEST_CASE("bow against the straight taper peaks at mid-height") {
    ColumnProfile p = presets::penrose_profile();
    EntasisDeviation e = entasis_deviation(p);
    CHECK(e.z_star == doctest::Approx(5.02).epsilon(1e-12));
    CHECK(e.delta == doctest::Approx(0.0180627143052).epsilon(1e-12));
}

TEST_CASE("a straight taper has no bow") {
    ColumnProfile straight = presets::straight_taper(presets::penrose_profile());
    CHECK(straight.c2 == 0.0);
    EntasisDeviation e = entasis_deviation(straight);
    CHECK(e.delta == doctest::Approx(0.0));
    CHECK(radius_at(straight, 0.0) ==
          doctest::Approx(radius_at(presets::penrose_profile(), 0.0)).epsilon(1e-13));
    CHECK(radius_at(straight, straight.h) ==
          doctest::Approx(radius_at(presets::penrose_profile(), straight.h)).epsilon(1e-13));
}

TEST_CASE("flute law hits 1 exactly on the ridges") {
    FluteSpec f = presets::doric_flutes();
    const double period = 2.0 * 3.14159265358979323846 / f.n_flutes;
    CHECK(flute_factor(f, period / 2.0) == 1.0);
    CHECK(flute_factor(f, -period / 2.0) == 1.0);
    CHECK(flute_factor(f, 3.0 * period / 2.0) == 1.0);
}

TEST_CASE("flute law groove depths") {
    FluteSpec half = presets::doric_flutes();
    CHECK(flute_factor(half, 0.0) == doctest::Approx(0.909575057767738).epsilon(1e-12));
    FluteSpec full = half;
    full.full_period_denominator = true;
    CHECK(flute_factor(full, 0.0) == doctest::Approx(0.678933785094199).epsilon(1e-12));
}

TEST_CASE("flute law is periodic and even") {
    FluteSpec f = presets::doric_flutes();
    const double period = 2.0 * 3.14159265358979323846 / f.n_flutes;
    for (double theta : {0.05, 0.11, 0.21, 1.3, 2.9}) {
        CHECK(flute_factor(f, theta) == doctest::Approx(flute_factor(f, theta + period)).epsilon(1e-12));
        CHECK(flute_factor(f, theta) == doctest::Approx(flute_factor(f, theta + 7 * period)).epsilon(1e-12));
        CHECK(flute_factor(f, theta) == doctest::Approx(flute_factor(f, -theta)).epsilon(1e-12));
    }
}

TEST_CASE("flute law never exceeds the tapering radius") {
    FluteSpec f = presets::doric_flutes();
    for (int k = 0; k <= 2000; ++k) {
        double theta = 2.0 * 3.14159265358979323846 * k / 2000.0;
        CHECK(flute_factor(f, theta) <= 1.0 + 1e-15);
    }
}

TEST_CASE("fluted radius is the taper radius scaled by the flute law") {
    ColumnSurface s{presets::penrose_profile(), presets::doric_flutes()};
    CHECK(flute_radius(s, 0.0, 5.02) == doctest::Approx(0.782397783561669).epsilon(1e-12));
    ColumnSurface plain{presets::penrose_profile(), std::nullopt};
    CHECK(flute_radius(plain, 1.234, 5.02) == doctest::Approx(radius_at(plain.profile, 5.02)).epsilon(1e-13));
}

TEST_CASE("shaft mesh has the contracted size and reaches the taper radius") {
    ColumnSurface s{presets::penrose_profile(), presets::doric_flutes()};
    const int n_theta = 160, n_z = 5;
    Mesh m = column_mesh(s, n_theta, n_z);
    REQUIRE(m.vertices.size() == std::size_t(n_theta) * n_z);
    REQUIRE(m.faces.size() == std::size_t(2) * n_theta * (n_z - 1));
    for (const auto& f : m.faces)
        CHECK(f[3] == 0);

    for (int j = 0; j < n_z; ++j) {
        double z = m.vertices[std::size_t(j) * n_theta][2];
        double rmax = 0.0;
        for (int i = 0; i < n_theta; ++i) {
            const auto& v = m.vertices[std::size_t(j) * n_theta + i];
            CHECK(v[2] == doctest::Approx(z));
            rmax = std::max(rmax, std::hypot(v[0], v[1]));
        }
        CHECK(rmax == doctest::Approx(radius_at(s.profile, z)).epsilon(1e-9));
    }
    CHECK(m.vertices.front()[2] == doctest::Approx(0.0));
    CHECK(m.vertices.back()[2] == doctest::Approx(s.profile.h));
}

TEST_CASE("mesh resolution guards") {
    ColumnSurface s{presets::penrose_profile(), presets::doric_flutes()};
    CHECK_THROWS_AS(column_mesh(s, 160, 1), std::invalid_argument);
    try {
        column_mesh(s, 59, 4);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("60") != std::string::npos);
    }
    ColumnSurface plain{presets::penrose_profile(), std::nullopt};
    CHECK_THROWS_AS(column_mesh(plain, 2, 4), std::invalid_argument);
    Mesh coarse = column_mesh(plain, 3, 2);
    CHECK(coarse.vertices.size() == 6);
}

} // TEST_SUITE
