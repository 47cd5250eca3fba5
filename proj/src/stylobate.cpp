#include "arx/stylobate.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace arx {

namespace {

struct CornerCheck {
    const char* label;
    double from_one;
    double from_other;
};

// integral of sqrt(1 + p^2) dp terms for the arc-weighted slope:
// A(p) = (p sqrt(1+p^2) + asinh p) / 2 integrates sqrt(1 + p^2),
// B(p) = sign(p) ((1+p^2)^(3/2) - 1) / 3 integrates |p| sqrt(1 + p^2)
double slope_A(double p) {
    return 0.5 * (p * std::sqrt(1.0 + p * p) + std::asinh(p));
}

double slope_B(double p) {
    const double t = std::pow(1.0 + p * p, 1.5) - 1.0;
    return (p >= 0.0 ? t : -t) / 3.0;
}

}  // namespace

StylobateSurface coons_build(const BoundarySet& bd) {
    const double a = bd.east.length;
    const double b = bd.south.length;
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("side lengths must be positive");
    if (std::fabs(bd.west.length - a) > 1e-12 * std::max(a, 1.0))
        throw std::invalid_argument("east and west profiles must share one length");
    if (std::fabs(bd.north.length - b) > 1e-12 * std::max(b, 1.0))
        throw std::invalid_argument("south and north profiles must share one length");

    const double P00 = bd.east.eval(0.0);   // south-east
    const double Pa0 = bd.east.eval(a);     // north-east
    const double P0b = bd.west.eval(0.0);   // south-west
    const double Pab = bd.west.eval(a);     // north-west

    const CornerCheck checks[4] = {
        {"south-east", P00, bd.south.eval(0.0)},
        {"north-east", Pa0, bd.north.eval(0.0)},
        {"south-west", P0b, bd.south.eval(b)},
        {"north-west", Pab, bd.north.eval(b)},
    };
    std::string bad;
    for (const auto& ck : checks) {
        const double gap = std::fabs(ck.from_one - ck.from_other);
        if (gap > 1e-6) {
            if (!bad.empty()) bad += "; ";
            bad += std::string(ck.label) + " corner disagrees by " +
                   std::to_string(gap) + " m";
        }
    }
    if (!bad.empty())
        throw std::invalid_argument("boundary profiles do not meet at the corners: " + bad);

    const double e0 = bd.east.c0, e1 = bd.east.c1, e2 = bd.east.c2;
    const double w0 = bd.west.c0, w1 = bd.west.c1, w2 = bd.west.c2;
    const double s0 = bd.south.c0, s1 = bd.south.c1, s2 = bd.south.c2;
    const double n0 = bd.north.c0, n1 = bd.north.c1, n2 = bd.north.c2;

    StylobateSurface out;
    out.a = a;
    out.b = b;
    out.c[0] = e0 + s0 - P00;
    out.c[1] = e1 + (n0 - s0 + P00 - Pa0) / a;
    out.c[2] = s1 + (w0 - e0 + P00 - P0b) / b;
    out.c[3] = e2;
    out.c[4] = s2;
    out.c[5] = (w1 - e1) / b + (n1 - s1) / a + (-P00 + P0b + Pa0 - Pab) / (a * b);
    out.c[6] = (w2 - e2) / b;
    out.c[7] = (n2 - s2) / a;
    return out;
}

double elevation(const StylobateSurface& s, double x, double y) {
    const auto& c = s.c;
    return c[0] + c[1] * x + c[2] * y + c[3] * x * x + c[4] * y * y +
           c[5] * x * y + c[6] * x * x * y + c[7] * x * y * y;
}

namespace {

void gradient(const StylobateSurface& s, double x, double y, double& gx, double& gy) {
    const auto& c = s.c;
    gx = c[1] + 2.0 * c[3] * x + c[5] * y + 2.0 * c[6] * x * y + c[7] * y * y;
    gy = c[2] + 2.0 * c[4] * y + c[5] * x + c[6] * x * x + 2.0 * c[7] * x * y;
}

void hessian(const StylobateSurface& s, double x, double y,
             double& hxx, double& hxy, double& hyy) {
    const auto& c = s.c;
    hxx = 2.0 * c[3] + 2.0 * c[6] * y;
    hxy = c[5] + 2.0 * c[6] * x + 2.0 * c[7] * y;
    hyy = 2.0 * c[4] + 2.0 * c[7] * x;
}

bool newton_crown(const StylobateSurface& s, double x, double y, CrownPoint& out) {
    for (int it = 0; it < 200; ++it) {
        double gx, gy, hxx, hxy, hyy;
        gradient(s, x, y, gx, gy);
        hessian(s, x, y, hxx, hxy, hyy);
        const double det = hxx * hyy - hxy * hxy;
        if (std::fabs(det) < 1e-300) return false;
        const double dx = (hyy * gx - hxy * gy) / det;
        const double dy = (hxx * gy - hxy * gx) / det;
        x -= dx;
        y -= dy;
        if (!(x > -s.a && x < 2.0 * s.a && y > -s.b && y < 2.0 * s.b)) return false;
        if (std::fabs(dx) < 1e-14 * std::max(s.a, 1.0) &&
            std::fabs(dy) < 1e-14 * std::max(s.b, 1.0)) {
            double hxx2, hxy2, hyy2;
            gradient(s, x, y, gx, gy);
            hessian(s, x, y, hxx2, hxy2, hyy2);
            if (x <= 0.0 || x >= s.a || y <= 0.0 || y >= s.b) return false;
            if (!(hxx2 < 0.0 && hxx2 * hyy2 - hxy2 * hxy2 > 0.0)) return false;
            out.x = x;
            out.y = y;
            out.z = elevation(s, x, y);
            out.grad_norm = std::hypot(gx, gy);
            return true;
        }
    }
    return false;
}

}  // namespace

CrownPoint find_crown(const StylobateSurface& s) {
    CrownPoint out;
    if (newton_crown(s, s.a * 0.5, s.b * 0.5, out)) return out;

    // fallback: seed from the best cell of a 1 cm grid
    double best_z = -std::numeric_limits<double>::infinity();
    double bx = s.a * 0.5, by = s.b * 0.5;
    const int nx = std::max(2, int(std::ceil(s.a / 0.01)));
    const int ny = std::max(2, int(std::ceil(s.b / 0.01)));
    for (int i = 1; i < nx; ++i) {
        const double x = s.a * i / nx;
        for (int j = 1; j < ny; ++j) {
            const double y = s.b * j / ny;
            const double z = elevation(s, x, y);
            if (z > best_z) {
                best_z = z;
                bx = x;
                by = y;
            }
        }
    }
    if (newton_crown(s, bx, by, out)) return out;
    throw std::runtime_error("no interior crown: the surface has no interior maximum");
}

ParabolicArc side_arc(const StylobateSurface& s, Side side) {
    const auto& c = s.c;
    ParabolicArc arc;
    switch (side) {
        case Side::east:  // y = 0, parameter x
            arc = {c[0], c[1], c[3], s.a};
            break;
        case Side::west:  // y = b
            arc = {c[0] + c[2] * s.b + c[4] * s.b * s.b,
                   c[1] + c[5] * s.b + c[7] * s.b * s.b,
                   c[3] + c[6] * s.b, s.a};
            break;
        case Side::south:  // x = 0, parameter y
            arc = {c[0], c[2], c[4], s.b};
            break;
        case Side::north:  // x = a
            arc = {c[0] + c[1] * s.a + c[3] * s.a * s.a,
                   c[2] + c[5] * s.a + c[6] * s.a * s.a,
                   c[4] + c[7] * s.a, s.b};
            break;
    }
    return arc;
}

double side_mean_slope_deg(const StylobateSurface& s, Side side) {
    const ParabolicArc arc = side_arc(s, side);
    const double p0 = arc.slope(0.0);
    const double p1 = arc.slope(arc.length);
    double mean_abs_slope;
    if (std::fabs(arc.c2) < 1e-300) {
        mean_abs_slope = std::fabs(arc.c1);
    } else {
        const double inv = 1.0 / (2.0 * arc.c2);
        const double arc_len = (slope_A(p1) - slope_A(p0)) * inv;
        const double weighted = (slope_B(p1) - slope_B(p0)) * inv;
        mean_abs_slope = weighted / arc_len;
    }
    return std::atan(mean_abs_slope) * 180.0 / std::numbers::pi;
}

Mesh export_mesh(const StylobateSurface& s, int nx, int ny) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("mesh needs at least one cell per axis");
    Mesh mesh;
    mesh.vertices.reserve(std::size_t(nx + 1) * std::size_t(ny + 1));
    for (int j = 0; j <= ny; ++j) {
        const double y = s.b * j / ny;
        for (int i = 0; i <= nx; ++i) {
            const double x = s.a * i / nx;
            mesh.vertices.push_back({x, y, elevation(s, x, y)});
        }
    }
    auto vid = [nx](int i, int j) { return std::uint32_t(j * (nx + 1) + i + 1); };
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            mesh.add_quad(vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1));
    return mesh;
}

const char* side_name(Side s) {
    switch (s) {
        case Side::east: return "east";
        case Side::west: return "west";
        case Side::south: return "south";
        case Side::north: return "north";
    }
    return "?";
}

}  // namespace arx
