#include "arx/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace arx {

namespace {

constexpr double kEps = 1e-9;   // grazing guard on segment overlaps
constexpr double kFar = 1e9;    // stand-in for an unbounded ray

void check_footprint(const Footprint& fp) {
    if (!(fp.a > 0.0 && fp.b > 0.0))
        throw std::invalid_argument("footprint sides must be positive");
    if (!(fp.corner_column_radius > 0.0))
        throw std::invalid_argument("column radius must be positive");
    if (!(fp.column_inset > 0.0))
        throw std::invalid_argument("column inset must be positive");
    if (!(fp.band_depth >= 0.0))
        throw std::invalid_argument("walkway depth must be nonnegative");
}

// does the ray p + t d, restricted to t in (t0, t1), cross the box?
bool seg_hits_rect(double px, double py, double dx, double dy, double t0, double t1,
                   double x0, double x1, double y0, double y1) {
    if (x0 > x1 || y0 > y1) return false;
    double lo = t0, hi = t1;
    const double p[2] = {px, py}, d[2] = {dx, dy}, l[2] = {x0, y0}, h[2] = {x1, y1};
    for (int axis = 0; axis < 2; ++axis) {
        if (std::fabs(d[axis]) < 1e-300) {
            if (p[axis] < l[axis] || p[axis] > h[axis]) return false;
        } else {
            double ta = (l[axis] - p[axis]) / d[axis];
            double tb = (h[axis] - p[axis]) / d[axis];
            if (ta > tb) std::swap(ta, tb);
            lo = std::max(lo, ta);
            hi = std::min(hi, tb);
        }
    }
    return lo + kEps < hi;
}

bool seg_hits_disc(double px, double py, double dx, double dy, double t0, double t1,
                   double cx, double cy, double r) {
    const double ox = px - cx, oy = py - cy;
    const double bq = ox * dx + oy * dy;
    const double cq = ox * ox + oy * oy - r * r;
    const double disc = bq * bq - cq;
    if (disc <= 0.0) return false;
    const double s = std::sqrt(disc);
    const double lo = std::max(t0, -bq - s);
    const double hi = std::min(t1, -bq + s);
    return lo + kEps < hi;
}

// the whole model evaluated for the south-east corner; the other corners
// fold onto this one by mirroring the viewer
bool se_corner_sky(const Footprint& fp, double px, double py, int n_rays) {
    if (!(py < 0.0 || px < 0.0)) return false;  // behind both of this corner's facades

    const double r = fp.corner_column_radius;
    const double inset = fp.column_inset;
    const double cx = inset, cy = inset;
    const double ddx = cx - px, ddy = cy - py;
    const double dist = std::hypot(ddx, ddy);
    const double phi = std::atan2(ddy, ddx);
    const double psi = std::asin(std::min(1.0, r / dist));

    const double w = fp.band_depth;
    const double core_x0 = w, core_x1 = fp.a - w;
    const double core_y0 = w, core_y1 = fp.b - w;
    const double others[3][2] = {
        {fp.a - inset, inset},
        {fp.a - inset, fp.b - inset},
        {inset, fp.b - inset},
    };

    const double ox = px - cx, oy = py - cy;
    const double cq = ox * ox + oy * oy - r * r;
    for (int k = 0; k < n_rays; ++k) {
        const double u = -1.0 + (2.0 * k + 1.0) / n_rays;
        const double ang = phi + psi * u;
        const double dx = std::cos(ang), dy = std::sin(ang);
        const double bq = ox * dx + oy * dy;
        const double dsc = std::max(bq * bq - cq, 0.0);
        const double s = std::sqrt(dsc);
        const double spans[2][2] = {{0.0, -bq - s}, {-bq + s, kFar}};
        for (const auto& span : spans) {
            if (seg_hits_rect(px, py, dx, dy, span[0], span[1],
                              core_x0, core_x1, core_y0, core_y1))
                return false;
            for (const auto& o : others)
                if (seg_hits_disc(px, py, dx, dy, span[0], span[1], o[0], o[1], r))
                    return false;
        }
    }
    return true;
}

void fold_to_se(const Footprint& fp, Corner corner, double px, double py,
                double& qx, double& qy) {
    qx = (corner == Corner::ne || corner == Corner::nw) ? fp.a - px : px;
    qy = (corner == Corner::nw || corner == Corner::sw) ? fp.b - py : py;
}

bool inside_footprint(const Footprint& fp, double x, double y) {
    return x >= 0.0 && x <= fp.a && y >= 0.0 && y <= fp.b;
}

bool inside_any_disc(const Footprint& fp, double x, double y) {
    const double r = fp.corner_column_radius, inset = fp.column_inset;
    const double cs[4][2] = {{inset, inset},
                             {fp.a - inset, inset},
                             {fp.a - inset, fp.b - inset},
                             {inset, fp.b - inset}};
    for (const auto& c : cs)
        if (std::hypot(x - c[0], y - c[1]) <= r) return true;
    return false;
}

}  // namespace

bool corner_against_sky(const Footprint& fp, double px, double py, Corner corner,
                        int n_rays) {
    check_footprint(fp);
    if (n_rays < 1) throw std::invalid_argument("need at least one ray");
    if (inside_footprint(fp, px, py))
        throw std::invalid_argument("viewer must be strictly outside the footprint");
    double qx, qy;
    fold_to_se(fp, corner, px, py, qx, qy);
    if (std::hypot(qx - fp.column_inset, qy - fp.column_inset) <= fp.corner_column_radius)
        throw std::invalid_argument("viewer is inside the queried corner column");
    return se_corner_sky(fp, qx, qy, n_rays);
}

VantageClass classify_vantage(const Footprint& fp, double px, double py, Facade facade,
                              int n_rays) {
    const auto corners = facade_corners(facade);
    int n = 0;
    for (Corner c : corners)
        if (corner_against_sky(fp, px, py, c, n_rays)) ++n;
    return n == 0 ? VantageClass::none : (n == 1 ? VantageClass::one : VantageClass::both);
}

Extent centered_extent(const Footprint& fp, double width, double height) {
    if (!(width > 0.0 && height > 0.0))
        throw std::invalid_argument("extent dimensions must be positive");
    Extent e;
    e.x_min = fp.a * 0.5 - width * 0.5;
    e.x_max = fp.a * 0.5 + width * 0.5;
    e.y_min = fp.b * 0.5 - height * 0.5;
    e.y_max = fp.b * 0.5 + height * 0.5;
    return e;
}

double VantageMap::cell_x(int ix) const { return extent.x_min + (ix + 0.5) * cell; }
double VantageMap::cell_y(int iy) const { return extent.y_min + (iy + 0.5) * cell; }

int VantageMap::facade_class(Facade f, int ix, int iy) const {
    const auto corners = facade_corners(f);
    const auto i = index(ix, iy);
    const int v1 = corner_sky[std::size_t(corners[0])][i];
    const int v2 = corner_sky[std::size_t(corners[1])][i];
    if (v1 < 0 || v2 < 0) return -1;
    return v1 + v2;
}

double VantageMap::both_area(Facade f) const {
    long n = 0;
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            if (facade_class(f, ix, iy) == 2) ++n;
    return double(n) * cell * cell;
}

void VantageMap::write_csv(std::ostream& out, Facade f) const {
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            if (ix) out << ',';
            out << facade_class(f, ix, iy);
        }
        out << '\n';
    }
}

VantageMap vantage_map(const Footprint& fp, const Extent& extent, double cell,
                       int n_rays) {
    check_footprint(fp);
    if (!(cell > 0.0)) throw std::invalid_argument("cell size must be positive");
    if (!(extent.x_max > extent.x_min && extent.y_max > extent.y_min))
        throw std::invalid_argument("extent must be nonempty");
    if (n_rays < 1) throw std::invalid_argument("need at least one ray");

    VantageMap map;
    map.extent = extent;
    map.cell = cell;
    map.nx = std::max(1, int(std::llround((extent.x_max - extent.x_min) / cell)));
    map.ny = std::max(1, int(std::llround((extent.y_max - extent.y_min) / cell)));
    map.n_rays = n_rays;
    const std::size_t total = std::size_t(map.nx) * std::size_t(map.ny);
    for (auto& layer : map.corner_sky) layer.assign(total, 0);

    const bool centered = std::fabs(extent.x_min + extent.x_max - fp.a) < 1e-9 &&
                          std::fabs(extent.y_min + extent.y_max - fp.b) < 1e-9;

    auto& se = map.corner_sky[std::size_t(Corner::se)];
    auto& ne = map.corner_sky[std::size_t(Corner::ne)];
    auto& nw = map.corner_sky[std::size_t(Corner::nw)];
    auto& sw = map.corner_sky[std::size_t(Corner::sw)];

    if (centered) {
        // mirror-symmetric grid: the mask is evaluated on one quadrant and
        // reflected, the sky test is evaluated for one corner and the other
        // three layers are reflections of it, so the map's symmetry is exact
        const int hx = (map.nx + 1) / 2, hy = (map.ny + 1) / 2;
        for (int iy = 0; iy < hy; ++iy) {
            for (int ix = 0; ix < hx; ++ix) {
                const double x = map.cell_x(ix), y = map.cell_y(iy);
                const bool masked =
                    inside_footprint(fp, x, y) || inside_any_disc(fp, x, y);
                if (!masked) continue;
                const int mx = map.nx - 1 - ix, my = map.ny - 1 - iy;
                se[map.index(ix, iy)] = -1;
                se[map.index(mx, iy)] = -1;
                se[map.index(ix, my)] = -1;
                se[map.index(mx, my)] = -1;
            }
        }
        for (int iy = 0; iy < map.ny; ++iy)
            for (int ix = 0; ix < map.nx; ++ix) {
                auto& v = se[map.index(ix, iy)];
                if (v < 0) continue;
                v = se_corner_sky(fp, map.cell_x(ix), map.cell_y(iy), n_rays) ? 1 : 0;
            }
        for (int iy = 0; iy < map.ny; ++iy) {
            const int my = map.ny - 1 - iy;
            for (int ix = 0; ix < map.nx; ++ix) {
                const int mx = map.nx - 1 - ix;
                ne[map.index(ix, iy)] = se[map.index(mx, iy)];
                nw[map.index(ix, iy)] = se[map.index(mx, my)];
                sw[map.index(ix, iy)] = se[map.index(ix, my)];
            }
        }
        return map;
    }

    for (int iy = 0; iy < map.ny; ++iy) {
        for (int ix = 0; ix < map.nx; ++ix) {
            const double x = map.cell_x(ix), y = map.cell_y(iy);
            const auto i = map.index(ix, iy);
            if (inside_footprint(fp, x, y) || inside_any_disc(fp, x, y)) {
                se[i] = ne[i] = nw[i] = sw[i] = -1;
                continue;
            }
            for (int c = 0; c < 4; ++c) {
                double qx, qy;
                fold_to_se(fp, Corner(c), x, y, qx, qy);
                map.corner_sky[std::size_t(c)][i] =
                    se_corner_sky(fp, qx, qy, n_rays) ? 1 : 0;
            }
        }
    }
    return map;
}

std::array<Corner, 2> facade_corners(Facade f) {
    switch (f) {
        case Facade::east: return {Corner::se, Corner::ne};
        case Facade::west: return {Corner::sw, Corner::nw};
        case Facade::south: return {Corner::se, Corner::sw};
        case Facade::north: return {Corner::ne, Corner::nw};
    }
    throw std::invalid_argument("unknown facade");
}

const char* facade_name(Facade f) {
    switch (f) {
        case Facade::east: return "east";
        case Facade::west: return "west";
        case Facade::south: return "south";
        case Facade::north: return "north";
    }
    return "?";
}

const char* corner_name(Corner c) {
    switch (c) {
        case Corner::se: return "se";
        case Corner::ne: return "ne";
        case Corner::nw: return "nw";
        case Corner::sw: return "sw";
    }
    return "?";
}

Facade facade_from_name(const std::string& name) {
    if (name == "east") return Facade::east;
    if (name == "west") return Facade::west;
    if (name == "south") return Facade::south;
    if (name == "north") return Facade::north;
    throw std::invalid_argument("unknown facade: " + name);
}

}  // namespace arx
