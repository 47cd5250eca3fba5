#pragma once

#include <array>

#include "arx/mesh.hpp"

namespace arx {

// quadratic side profile v(t) = c0 + c1 t + c2 t^2 on [0, length]
struct ParabolicArc {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
    double length = 0.0;

    double eval(double t) const { return c0 + (c1 + c2 * t) * t; }
    double slope(double t) const { return c1 + 2.0 * c2 * t; }
};

enum class Side { east, west, south, north };

// Plan frame: origin at the south-east corner, x runs north (width a),
// y runs west (length b). east/west profiles are parameterized by x,
// south/north by y.
struct BoundarySet {
    ParabolicArc east;   // y = 0
    ParabolicArc west;   // y = b
    ParabolicArc south;  // x = 0
    ParabolicArc north;  // x = a
};

// f(x, y) = c[0] + c[1] x + c[2] y + c[3] x^2 + c[4] y^2 + c[5] x y
//         + c[6] x^2 y + c[7] x y^2, on [0, a] x [0, b]
struct StylobateSurface {
    std::array<double, 8> c{};
    double a = 0.0;
    double b = 0.0;
};

struct CrownPoint {
    double x = 0.0, y = 0.0, z = 0.0;
    double grad_norm = 0.0;
};

// bilinear blend of the four side profiles; rejects corner mismatches
// above 1e-6 m with per-corner diagnostics
StylobateSurface coons_build(const BoundarySet& boundaries);

double elevation(const StylobateSurface& s, double x, double y);

// interior stationary point by Newton iteration from the domain center,
// dense-grid fallback; verified to be a local maximum
CrownPoint find_crown(const StylobateSurface& s);

ParabolicArc side_arc(const StylobateSurface& s, Side side);

// arc-length-weighted mean of |dv/ds| along the side, as an angle
double side_mean_slope_deg(const StylobateSurface& s, Side side);

Mesh export_mesh(const StylobateSurface& s, int nx, int ny);

const char* side_name(Side s);

}  // namespace arx
