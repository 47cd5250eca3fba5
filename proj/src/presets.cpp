#include "arx/presets.hpp"

#include <numbers>

namespace arx::presets {

StylobateSurface parthenon_surface() {
    StylobateSurface s;
    s.a = 30.9;
    s.b = 69.5;
    s.c = {1.16078e-3,   8.87918e-3,  8.00577e-3,   -0.288568e-3,
           -0.105338e-3, -0.0523071e-3, 0.000459584e-3, 0.000413477e-3};
    return s;
}

BoundarySet parthenon_boundaries() {
    const StylobateSurface s = parthenon_surface();
    BoundarySet bd;
    bd.east = side_arc(s, Side::east);
    bd.west = side_arc(s, Side::west);
    bd.south = side_arc(s, Side::south);
    bd.north = side_arc(s, Side::north);
    return bd;
}

ColumnProfile penrose_profile() {
    return {0.954753, -0.0152412, -0.000716763, 10.04};
}

FluteSpec doric_flutes() { return FluteSpec{}; }

ColumnProfile straight_taper(const ColumnProfile& p) {
    return {p.c0, p.c1 + p.c2 * p.h, 0.0, p.h};
}

Footprint parthenon_footprint() { return Footprint{}; }

FilmFlow stylobate_runoff() {
    FilmFlow f;
    f.theta = 0.2 * std::numbers::pi / 180.0;
    f.h0 = 1e-3;
    f.L = 30.0;
    return f;
}

BucklingCase marble_column() {
    BucklingCase c;
    c.E = 40e9;
    c.L = 10.4;
    c.r = 0.75;
    return c;
}

}  // namespace arx::presets
