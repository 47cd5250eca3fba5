#include "doctest.h"

#include "arx/presets.hpp"
#include "arx/visibility.hpp"

#include <cmath>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

using namespace arx;

TEST_SUITE("visibility") {

TEST_CASE("corner silhouettes at probe points") {
    Footprint fp = presets::parthenon_footprint();

    SUBCASE("diagonal vantage off the south-east corner") {
        double px = fp.a + 60.0 / std::sqrt(2.0);
        double py = -60.0 / std::sqrt(2.0);
        CHECK(corner_against_sky(fp, px, py, Corner::se));
        CHECK_FALSE(corner_against_sky(fp, px, py, Corner::ne));
        CHECK(corner_against_sky(fp, px, py, Corner::nw));
        CHECK_FALSE(corner_against_sky(fp, px, py, Corner::sw));
    }

    SUBCASE("close on the east facade axis both east corners clear") {
        CHECK(corner_against_sky(fp, 15.45, -5.0, Corner::se));
        CHECK(corner_against_sky(fp, 15.45, -5.0, Corner::ne));
        CHECK_FALSE(corner_against_sky(fp, 15.45, -5.0, Corner::nw));
        CHECK_FALSE(corner_against_sky(fp, 15.45, -5.0, Corner::sw));
    }

    SUBCASE("far north grazing lines") {
        CHECK_FALSE(corner_against_sky(fp, 150.0, -1.3, Corner::se));
        CHECK_FALSE(corner_against_sky(fp, 150.0, -1.3, Corner::ne));
        CHECK(corner_against_sky(fp, 150.0, -1.3, Corner::nw));
        CHECK_FALSE(corner_against_sky(fp, 150.0, -1.3, Corner::sw));

        CHECK(corner_against_sky(fp, 150.0, -2.0, Corner::nw));
        CHECK_FALSE(corner_against_sky(fp, 150.0, -6.0, Corner::ne));
        CHECK(corner_against_sky(fp, 150.0, -6.0, Corner::nw));
    }

    SUBCASE("far south mirror of the grazing line") {
        CHECK(corner_against_sky(fp, -100.0, -1.3, Corner::sw));
        CHECK_FALSE(corner_against_sky(fp, -100.0, -1.3, Corner::nw));
    }
}

TEST_CASE("viewer placement guards") {
    Footprint fp = presets::parthenon_footprint();
    CHECK_THROWS_AS(corner_against_sky(fp, 15.0, 35.0, Corner::se), std::invalid_argument);
    CHECK_THROWS_AS(corner_against_sky(fp, 0.0, 0.0, Corner::se), std::invalid_argument);
    CHECK_THROWS_AS(corner_against_sky(fp, 15.45, -5.0, Corner::se, 0), std::invalid_argument);

    Footprint hug = fp;
    hug.column_inset = 0.1;
    CHECK_THROWS_AS(corner_against_sky(hug, 0.1, -0.5, Corner::se), std::invalid_argument);

    Footprint bad = fp;
    bad.corner_column_radius = 0.0;
    CHECK_THROWS_AS(corner_against_sky(bad, 15.45, -5.0, Corner::se), std::invalid_argument);
}

TEST_CASE("classification folds exactly under the footprint mirrors") {
    Footprint fp = presets::parthenon_footprint();
    const double probes[][2] = {{40.0, -7.0},   {33.0, -21.0}, {-9.0, -3.0},
                                {70.0, 12.0},   {31.5, -0.7},  {100.0, -40.0},
                                {15.45, -5.0},  {150.0, -1.3}, {-3.0, 80.0}};
    for (const auto& p : probes) {
        double x = p[0], y = p[1];
        bool se = corner_against_sky(fp, x, y, Corner::se);
        CHECK(corner_against_sky(fp, fp.a - x, y, Corner::ne) == se);
        CHECK(corner_against_sky(fp, fp.a - x, fp.b - y, Corner::nw) == se);
        CHECK(corner_against_sky(fp, x, fp.b - y, Corner::sw) == se);
    }
}

TEST_CASE("square footprint is symmetric across its diagonal") {
    Footprint fp = presets::parthenon_footprint();
    fp.b = fp.a;
    const double probes[][2] = {{40.0, -7.0}, {-9.0, -3.0}, {36.0, -21.0}, {50.0, 11.0}};
    for (const auto& p : probes) {
        double x = p[0], y = p[1];
        CHECK(corner_against_sky(fp, x, y, Corner::se) ==
              corner_against_sky(fp, y, x, Corner::se));
        CHECK(corner_against_sky(fp, x, y, Corner::ne) ==
              corner_against_sky(fp, y, x, Corner::sw));
    }
}

TEST_CASE("refining the ray count never resurrects a blocked corner") {
    Footprint fp = presets::parthenon_footprint();
    for (int k = 0; k < 16; ++k) {
        double ang = 0.1 + k * 0.37;
        double x = fp.a / 2.0 + 55.0 * std::cos(ang);
        double y = fp.b / 2.0 + 55.0 * std::sin(ang);
        for (Corner c : {Corner::se, Corner::ne, Corner::nw, Corner::sw}) {
            bool coarse = corner_against_sky(fp, x, y, c, 64);
            bool fine = corner_against_sky(fp, x, y, c, 192);
            if (!coarse) CHECK_FALSE(fine);
        }
    }
}

TEST_CASE("facade classification at probe points") {
    Footprint fp = presets::parthenon_footprint();
    CHECK(classify_vantage(fp, 15.45, -5.0, Facade::east) == VantageClass::both);
    CHECK(classify_vantage(fp, 150.0, -1.3, Facade::east) == VantageClass::none);
    CHECK(classify_vantage(fp, 150.0, -1.3, Facade::west) == VantageClass::one);
    CHECK(classify_vantage(fp, -100.0, -1.3, Facade::south) == VantageClass::one);
}

TEST_CASE("centered extent arithmetic") {
    Footprint fp = presets::parthenon_footprint();
    Extent e = centered_extent(fp, 300.0, 200.0);
    CHECK(e.x_min == doctest::Approx(fp.a / 2.0 - 150.0).epsilon(1e-13));
    CHECK(e.x_max == doctest::Approx(fp.a / 2.0 + 150.0).epsilon(1e-13));
    CHECK(e.y_min == doctest::Approx(fp.b / 2.0 - 100.0).epsilon(1e-13));
    CHECK(e.y_max == doctest::Approx(fp.b / 2.0 + 100.0).epsilon(1e-13));
    CHECK_THROWS_AS(centered_extent(fp, 0.0, 10.0), std::invalid_argument);
}

TEST_CASE("raster matches the pointwise classifier cell by cell") {
    Footprint fp = presets::parthenon_footprint();
    Extent e = centered_extent(fp, 90.0, 120.0);
    VantageMap map = vantage_map(fp, e, 6.0, 16);
    REQUIRE(map.nx == 15);
    REQUIRE(map.ny == 20);
    for (int iy = 0; iy < map.ny; ++iy)
        for (int ix = 0; ix < map.nx; ++ix) {
            double x = map.cell_x(ix);
            double y = map.cell_y(iy);
            CHECK(x == doctest::Approx(e.x_min + (ix + 0.5) * 6.0).epsilon(1e-13));
            bool masked_here = (x >= 0.0 && x <= fp.a && y >= 0.0 && y <= fp.b);
            for (double cx : {fp.column_inset, fp.a - fp.column_inset})
                for (double cy : {fp.column_inset, fp.b - fp.column_inset})
                    if (std::hypot(x - cx, y - cy) <= fp.corner_column_radius)
                        masked_here = true;
            for (Corner c : {Corner::se, Corner::ne, Corner::nw, Corner::sw}) {
                int code = map.corner_sky[std::size_t(c)][map.index(ix, iy)];
                if (masked_here) {
                    CHECK(code == -1);
                } else {
                    CHECK(code == (corner_against_sky(fp, x, y, c, 16) ? 1 : 0));
                }
            }
        }
}

TEST_CASE("raster symmetry is exact on a centered extent") {
    Footprint fp = presets::parthenon_footprint();
    VantageMap map = vantage_map(fp, centered_extent(fp, 150.0, 150.0), 2.0, 16);
    const auto& se = map.corner_sky[std::size_t(Corner::se)];
    const auto& ne = map.corner_sky[std::size_t(Corner::ne)];
    const auto& nw = map.corner_sky[std::size_t(Corner::nw)];
    const auto& sw = map.corner_sky[std::size_t(Corner::sw)];
    for (int iy = 0; iy < map.ny; ++iy)
        for (int ix = 0; ix < map.nx; ++ix) {
            int v = se[map.index(ix, iy)];
            CHECK(ne[map.index(map.nx - 1 - ix, iy)] == v);
            CHECK(nw[map.index(map.nx - 1 - ix, map.ny - 1 - iy)] == v);
            CHECK(sw[map.index(ix, map.ny - 1 - iy)] == v);
        }
}

TEST_CASE("both-corner areas of the survey footprint") {
    Footprint fp = presets::parthenon_footprint();
    VantageMap map = vantage_map(fp, centered_extent(fp, 300.0, 300.0), 2.0, 32);
    CHECK(map.both_area(Facade::east) == doctest::Approx(2752.0));
    CHECK(map.both_area(Facade::west) == doctest::Approx(2752.0));
    CHECK(map.both_area(Facade::south) == doctest::Approx(7568.0));
    CHECK(map.both_area(Facade::north) == doctest::Approx(7568.0));
}

TEST_CASE("both-corner regions of the four facades never overlap") {
    Footprint fp = presets::parthenon_footprint();
    VantageMap map = vantage_map(fp, centered_extent(fp, 300.0, 300.0), 4.0, 16);
    const Facade all[] = {Facade::east, Facade::west, Facade::south, Facade::north};
    for (int iy = 0; iy < map.ny; ++iy)
        for (int ix = 0; ix < map.nx; ++ix) {
            int hits = 0;
            for (Facade f : all)
                if (map.facade_class(f, ix, iy) == 2) ++hits;
            CHECK(hits <= 1);
        }
}

TEST_CASE("slimmer corner columns widen every both-corner region") {
    Footprint fp = presets::parthenon_footprint();
    Extent e = centered_extent(fp, 300.0, 300.0);
    double prev_east = -1.0, prev_south = -1.0;
    for (double r : {0.9735, 0.5, 0.2}) {
        Footprint trial = fp;
        trial.corner_column_radius = r;
        trial.column_inset = r;
        VantageMap map = vantage_map(trial, e, 2.0, 32);
        CHECK(map.both_area(Facade::east) > prev_east);
        CHECK(map.both_area(Facade::south) > prev_south);
        prev_east = map.both_area(Facade::east);
        prev_south = map.both_area(Facade::south);
    }
    CHECK(prev_east == doctest::Approx(5800.0));
    CHECK(prev_south == doctest::Approx(11512.0));
}

TEST_CASE("facade class raster serializes as a plain matrix") {
    Footprint fp = presets::parthenon_footprint();
    VantageMap map = vantage_map(fp, centered_extent(fp, 60.0, 90.0), 6.0, 16);
    std::ostringstream out;
    map.write_csv(out, Facade::east);
    std::string text = out.str();

    int rows = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        int cols = 1;
        for (char ch : line)
            if (ch == ',') ++cols;
        CHECK(cols == map.nx);
    }
    CHECK(rows == map.ny);
    CHECK(text.find("-1") != std::string::npos);

    std::istringstream first_rows(text);
    std::getline(first_rows, line);
    std::istringstream cells(line);
    std::string cell;
    int ix = 0;
    while (std::getline(cells, cell, ',')) {
        CHECK(std::stoi(cell) == map.facade_class(Facade::east, ix, 0));
        ++ix;
    }
}

TEST_CASE("names map both ways") {
    CHECK(std::string(facade_name(Facade::east)) == "east");
    CHECK(std::string(facade_name(Facade::north)) == "north");
    CHECK(facade_from_name("west") == Facade::west);
    CHECK(facade_from_name("south") == Facade::south);
    CHECK_THROWS_AS(facade_from_name("up"), std::invalid_argument);
    CHECK(std::string(corner_name(Corner::se)) == "se");
    CHECK(std::string(corner_name(Corner::nw)) == "nw");
}

} // TEST_SUITE
