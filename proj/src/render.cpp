#include "arx/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "arx/numfmt.hpp"

namespace arx {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::string svg_open(double width_px, double height_px, const std::string& metadata) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!--\n" << metadata << "-->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << g9(width_px)
        << "\" height=\"" << g9(height_px) << "\" viewBox=\"0 0 " << g9(width_px)
        << ' ' << g9(height_px) << "\">\n";
    return out.str();
}

void emit_line(std::ostringstream& out, double x1, double y1, double x2, double y2,
               const std::string& attrs) {
    out << "<line x1=\"" << g9(x1) << "\" y1=\"" << g9(y1) << "\" x2=\"" << g9(x2)
        << "\" y2=\"" << g9(y2) << "\" " << attrs << "/>\n";
}

void emit_points(std::ostringstream& out, const char* tag,
                 const std::vector<std::array<double, 2>>& pts,
                 const std::string& attrs) {
    out << '<' << tag << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ' ';
        out << g9(pts[i][0]) << ',' << g9(pts[i][1]);
    }
    out << "\" " << attrs << "/>\n";
}

// intersection of the line c + t d with the canvas box, as a t interval
bool clip_to_canvas(double cx, double cy, double dx, double dy, double W, double H,
                    double t_lo, double t_hi, double& lo, double& hi) {
    lo = t_lo;
    hi = t_hi;
    const double p[2] = {cx, cy}, d[2] = {dx, dy}, top[2] = {W, H};
    for (int axis = 0; axis < 2; ++axis) {
        if (std::fabs(d[axis]) < 1e-300) {
            if (p[axis] < 0.0 || p[axis] > top[axis]) return false;
        } else {
            double ta = (0.0 - p[axis]) / d[axis];
            double tb = (top[axis] - p[axis]) / d[axis];
            if (ta > tb) std::swap(ta, tb);
            lo = std::max(lo, ta);
            hi = std::min(hi, tb);
        }
    }
    return lo < hi;
}

void emit_clipped_line(std::ostringstream& out, double cx, double cy, double ang_rad,
                       double W, double H, double t_lo, double t_hi,
                       const std::string& attrs) {
    const double dx = std::cos(ang_rad), dy = std::sin(ang_rad);
    double lo, hi;
    if (!clip_to_canvas(cx, cy, dx, dy, W, H, t_lo, t_hi, lo, hi)) return;
    emit_line(out, cx + lo * dx, cy + lo * dy, cx + hi * dx, cy + hi * dy, attrs);
}

constexpr double kFullLine = 1e9;

}  // namespace

std::string facade_svg(const FacadeSpec& spec) {
    if (spec.n_columns < 2) throw std::invalid_argument("need at least two columns");
    if (!(spec.px_per_m > 0.0)) throw std::invalid_argument("scale must be positive");
    if (!(spec.column.h > 0.0)) throw std::invalid_argument("column height must be positive");
    if (!(spec.stylobate.length > 0.0))
        throw std::invalid_argument("platform length must be positive");
    if (!(spec.tilt_deg >= 0.0 && spec.tilt_deg < 90.0))
        throw std::invalid_argument("tilt must lie in [0, 90) degrees");

    const double L = spec.stylobate.length;
    const double scale = spec.px_per_m;
    const double h = spec.column.h;
    const double tilt = spec.tilt_deg * kDeg;
    const double platform_thickness = 1.2;
    const double entablature_thickness = 1.0;
    const double edge_offset = 1.0;
    const double margin_x = 2.0, margin_z = 0.5;

    const double flat_level = 0.5 * (spec.stylobate.eval(0.0) + spec.stylobate.eval(L));
    auto z_top = [&](double x) {
        return spec.curvature ? spec.stylobate.eval(x) : flat_level;
    };
    auto radius = [&](double zc) {
        if (spec.entasis) return spec.column.c0 + (spec.column.c1 + spec.column.c2 * zc) * zc;
        const double r0 = spec.column.c0;
        const double rh = spec.column.c0 + (spec.column.c1 + spec.column.c2 * h) * h;
        return r0 + (rh - r0) * zc / h;
    };

    const int n_top = 256;  // stylobate/entablature samples when curved
    double z_hi = -1e300, z_lo = 1e300;
    for (int i = 0; i <= n_top; ++i) {
        const double z = z_top(L * i / n_top);
        z_hi = std::max(z_hi, z);
        z_lo = std::min(z_lo, z);
    }
    const double cap = h * std::cos(tilt) + entablature_thickness;
    const double world_top = z_hi + cap + margin_z;
    const double world_bottom = z_lo - platform_thickness - margin_z;

    const double width_px = (L + 2.0 * margin_x) * scale;
    const double height_px = (world_top - world_bottom) * scale;
    auto X = [&](double x) { return (x + margin_x) * scale; };
    auto Y = [&](double z) { return (world_top - z) * scale; };

    const double half_span = 0.5 * (L - 2.0 * edge_offset);

    std::ostringstream meta;
    meta << "kind=facade\n"
         << "variant=" << (spec.curvature ? "curved" : "straight") << '\n'
         << "curvature=" << (spec.curvature ? "on" : "off") << '\n'
         << "entasis=" << (spec.entasis ? "on" : "off") << '\n'
         << "n_columns=" << spec.n_columns << '\n'
         << "tilt_deg=" << g9(spec.tilt_deg) << '\n'
         << "px_per_m=" << g9(scale) << '\n'
         << "stylobate_c0=" << g9(spec.stylobate.c0) << '\n'
         << "stylobate_c1=" << g9(spec.stylobate.c1) << '\n'
         << "stylobate_c2=" << g9(spec.stylobate.c2) << '\n'
         << "stylobate_length=" << g9(L) << '\n'
         << "column_c0=" << g9(spec.column.c0) << '\n'
         << "column_c1=" << g9(spec.column.c1) << '\n'
         << "column_c2=" << g9(spec.column.c2) << '\n'
         << "column_h=" << g9(h) << '\n'
         << "edge_offset_m=" << g9(edge_offset) << '\n'
         << "half_span_m=" << g9(half_span) << '\n'
         << "x_origin_px=" << g9(X(0.0)) << '\n'
         << "z0_px=" << g9(Y(0.0)) << '\n';

    std::ostringstream out;
    out << svg_open(width_px, height_px, meta.str());
    out << "<rect x=\"0\" y=\"0\" width=\"" << g9(width_px) << "\" height=\""
        << g9(height_px) << "\" fill=\"#fbfaf7\"/>\n";

    auto band_points = [&](double offset_lo, double offset_hi) {
        // closed band between two vertical offsets from the platform curve
        std::vector<std::array<double, 2>> pts;
        if (spec.curvature) {
            for (int i = 0; i <= n_top; ++i) {
                const double x = L * i / n_top;
                pts.push_back({X(x), Y(z_top(x) + offset_hi)});
            }
            for (int i = n_top; i >= 0; --i) {
                const double x = L * i / n_top;
                pts.push_back({X(x), Y(z_top(x) + offset_lo)});
            }
        } else {
            pts.push_back({X(0.0), Y(flat_level + offset_hi)});
            pts.push_back({X(L), Y(flat_level + offset_hi)});
            pts.push_back({X(L), Y(flat_level + offset_lo)});
            pts.push_back({X(0.0), Y(flat_level + offset_lo)});
        }
        return pts;
    };
    auto edge_points = [&](double offset) {
        std::vector<std::array<double, 2>> pts;
        if (spec.curvature) {
            for (int i = 0; i <= n_top; ++i) {
                const double x = L * i / n_top;
                pts.push_back({X(x), Y(z_top(x) + offset)});
            }
        } else {
            pts.push_back({X(0.0), Y(flat_level + offset)});
            pts.push_back({X(L), Y(flat_level + offset)});
        }
        return pts;
    };

    const std::string band_style = "fill=\"#e4ddcf\" stroke=\"#4a4237\" stroke-width=\"1\"";
    emit_points(out, "polygon", band_points(-platform_thickness, 0.0), band_style);
    emit_points(out, "polygon",
                band_points(h * std::cos(tilt), h * std::cos(tilt) + entablature_thickness),
                band_style);
    emit_points(out, "polyline", edge_points(0.0),
                "id=\"stylobate_top\" fill=\"none\" stroke=\"#4a4237\" stroke-width=\"1.2\"");
    emit_points(out, "polyline", edge_points(h * std::cos(tilt)),
                "id=\"entablature_bottom\" fill=\"none\" stroke=\"#4a4237\" stroke-width=\"1.2\"");

    const int n_shaft = 128;
    for (int c = 0; c < spec.n_columns; ++c) {
        const double xb = edge_offset + (L - 2.0 * edge_offset) * c / (spec.n_columns - 1);
        const double lean = xb < 0.5 * L ? 1.0 : (xb > 0.5 * L ? -1.0 : 0.0);
        const double ax = lean * std::sin(tilt), az = std::cos(tilt);
        const double nx = az, nz = -ax;
        const double zb = z_top(xb);

        std::vector<std::array<double, 2>> outline;
        outline.reserve(2 * (n_shaft + 1));
        for (int i = 0; i <= n_shaft; ++i) {
            const double zc = h * i / n_shaft;
            const double r = radius(zc);
            outline.push_back({X(xb + zc * ax - r * nx), Y(zb + zc * az - r * nz)});
        }
        for (int i = n_shaft; i >= 0; --i) {
            const double zc = h * i / n_shaft;
            const double r = radius(zc);
            outline.push_back({X(xb + zc * ax + r * nx), Y(zb + zc * az + r * nz)});
        }
        emit_points(out, "polygon", outline,
                    "class=\"column\" fill=\"#efe9dc\" stroke=\"#4a4237\" stroke-width=\"1\"");
        out << "<line id=\"centerline_" << c << "\" x1=\"" << g9(X(xb)) << "\" y1=\""
            << g9(Y(zb)) << "\" x2=\"" << g9(X(xb + h * ax)) << "\" y2=\""
            << g9(Y(zb + h * az))
            << "\" stroke=\"#9a8f7d\" stroke-width=\"0.5\" stroke-dasharray=\"4 3\"/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

std::string illusion_svg(const IllusionSpec& spec) {
    if (spec.fan_count < 2) throw std::invalid_argument("need at least two modifier lines");
    if (!(spec.angle_min_deg > 0.0 && spec.angle_min_deg <= spec.angle_max_deg &&
          spec.angle_max_deg <= 90.0))
        throw std::invalid_argument("fan angles must satisfy 0 < min <= max <= 90 degrees");
    if (!(spec.width > 0.0 && spec.height > 0.0))
        throw std::invalid_argument("canvas dimensions must be positive");
    if (!(spec.target_offset > 0.0 && spec.target_offset < 0.5 * spec.height))
        throw std::invalid_argument("target offset must lie inside the canvas");
    if (!(spec.tilt_deg > 0.0 && spec.tilt_deg < 90.0))
        throw std::invalid_argument("tilt must lie in (0, 90) degrees");

    const double W = spec.width, H = spec.height;
    const int n = spec.fan_count;

    std::ostringstream meta;
    meta << "kind=illusion\n"
         << "illusion=" << illusion_kind_name(spec.kind) << '\n'
         << "fan_count=" << n << '\n'
         << "angle_min_deg=" << g9(spec.angle_min_deg) << '\n'
         << "angle_max_deg=" << g9(spec.angle_max_deg) << '\n'
         << "target_offset=" << g9(spec.target_offset) << '\n'
         << "tilt_deg=" << g9(spec.tilt_deg) << '\n'
         << "width=" << g9(W) << '\n'
         << "height=" << g9(H) << '\n';

    std::ostringstream out;
    out << svg_open(W, H, meta.str());
    out << "<rect x=\"0\" y=\"0\" width=\"" << g9(W) << "\" height=\"" << g9(H)
        << "\" fill=\"#ffffff\"/>\n";

    const std::string mod_style = "class=\"modifier\" stroke=\"#3a3a3a\" stroke-width=\"1\"";
    auto fan_angle = [&](int j) {
        return spec.angle_min_deg +
               (spec.angle_max_deg - spec.angle_min_deg) * j / double(n - 1);
    };

    auto center_fan = [&]() {
        out << "<g id=\"fan_center\">\n";
        for (int j = 0; j < n; ++j) {
            const double ang = fan_angle(j);
            emit_clipped_line(out, 0.5 * W, 0.5 * H, ang * kDeg, W, H, -kFullLine,
                              kFullLine, mod_style);
            if (std::fabs(ang - 90.0) > 1e-9)
                emit_clipped_line(out, 0.5 * W, 0.5 * H, (180.0 - ang) * kDeg, W, H,
                                  -kFullLine, kFullLine, mod_style);
        }
        out << "</g>\n";
    };
    auto rim_fans = [&]() {
        out << "<g id=\"fan_top\">\n";
        for (int j = 0; j < n; ++j) {
            const double ang = fan_angle(j);
            emit_clipped_line(out, 0.5 * W, 0.0, ang * kDeg, W, H, 0.0, kFullLine,
                              mod_style);
            if (std::fabs(ang - 90.0) > 1e-9)
                emit_clipped_line(out, 0.5 * W, 0.0, (180.0 - ang) * kDeg, W, H, 0.0,
                                  kFullLine, mod_style);
        }
        out << "</g>\n<g id=\"fan_bottom\">\n";
        for (int j = 0; j < n; ++j) {
            const double ang = fan_angle(j);
            emit_clipped_line(out, 0.5 * W, H, -ang * kDeg, W, H, 0.0, kFullLine,
                              mod_style);
            if (std::fabs(ang - 90.0) > 1e-9)
                emit_clipped_line(out, 0.5 * W, H, (ang - 180.0) * kDeg, W, H, 0.0,
                                  kFullLine, mod_style);
        }
        out << "</g>\n";
    };
    auto targets = [&]() {
        const std::string style = "class=\"target\" stroke=\"#b03030\" stroke-width=\"2\"";
        out << "<g id=\"targets\">\n";
        emit_line(out, 0.05 * W, 0.5 * H - spec.target_offset, 0.95 * W,
                  0.5 * H - spec.target_offset, style);
        emit_line(out, 0.05 * W, 0.5 * H + spec.target_offset, 0.95 * W,
                  0.5 * H + spec.target_offset, style);
        out << "</g>\n";
    };

    switch (spec.kind) {
        case IllusionKind::hering:
            center_fan();
            targets();
            break;
        case IllusionKind::wundt:
            rim_fans();
            targets();
            break;
        case IllusionKind::combined:
            center_fan();
            rim_fans();
            targets();
            break;
        case IllusionKind::perpendicular: {
            out << "<g id=\"tilted\">\n";
            const double t = spec.tilt_deg * kDeg;
            const double half_len = 0.45 * H;
            for (int j = 0; j < n; ++j) {
                const double x = 0.1 * W + 0.8 * W * j / double(n - 1);
                const double lean = x < 0.5 * W ? 1.0 : (x > 0.5 * W ? -1.0 : 0.0);
                const double dx = lean * std::sin(t) * half_len;
                const double dy = std::cos(t) * half_len;
                emit_line(out, x - dx, 0.5 * H + dy, x + dx, 0.5 * H - dy, mod_style);
            }
            out << "</g>\n";
            targets();
            break;
        }
        case IllusionKind::zollner: {
            const std::string main_style =
                "class=\"main\" stroke=\"#b03030\" stroke-width=\"2\"";
            const std::string hatch_style =
                "class=\"hatch\" stroke=\"#3a3a3a\" stroke-width=\"1\"";
            const double chi = 0.5 * (spec.angle_min_deg + spec.angle_max_deg) * kDeg;
            const double hl = 0.03 * W;
            out << "<g id=\"mains\">\n";
            for (int j = 0; j < n; ++j) {
                const double y = H * (j + 1) / double(n + 1);
                emit_line(out, 0.05 * W, y, 0.95 * W, y, main_style);
            }
            out << "</g>\n<g id=\"hatches\">\n";
            for (int j = 0; j < n; ++j) {
                const double y = H * (j + 1) / double(n + 1);
                const double sgn = j % 2 == 0 ? 1.0 : -1.0;
                const double dx = std::cos(chi) * hl, dy = sgn * std::sin(chi) * hl;
                for (double x = 0.08 * W; x <= 0.92 * W + 1e-9; x += 0.06 * W)
                    emit_line(out, x - dx, y - dy, x + dx, y + dy, hatch_style);
            }
            out << "</g>\n";
            break;
        }
    }

    out << "</svg>\n";
    return out.str();
}

std::string profile_pair_svg(const ColumnProfile& p1, const ColumnProfile& p2,
                             const PairSpec& spec) {
    if (p1.h != p2.h)
        throw std::invalid_argument("shaft heights differ; outlines share one scale only "
                                    "at equal heights");
    if (!(p1.h > 0.0)) throw std::invalid_argument("shaft height must be positive");
    if (!(spec.px_per_m > 0.0)) throw std::invalid_argument("scale must be positive");

    std::mt19937 rng(spec.seed);
    const bool first_left = (rng() & 1u) == 0u;
    const ColumnProfile* left = first_left ? &p1 : &p2;
    const ColumnProfile* right = first_left ? &p2 : &p1;

    const double h = p1.h;
    const double scale = spec.px_per_m;
    const int n_shaft = 128;
    double rmax = 0.0;
    for (int i = 0; i <= n_shaft; ++i) {
        const double z = h * i / n_shaft;
        rmax = std::max({rmax, radius_at(p1, z), radius_at(p2, z)});
    }

    const double pad = 0.6, gap = 1.5;
    const double axis_l = pad + rmax;
    const double axis_r = pad + 3.0 * rmax + gap;
    const double width_m = 4.0 * rmax + 2.0 * pad + gap;
    const double height_m = h + 2.0 * pad;
    auto X = [&](double x) { return x * scale; };
    auto Y = [&](double z) { return (h + pad - z) * scale; };

    std::ostringstream meta;
    meta << "kind=profile_pair\n"
         << "seed=" << spec.seed << '\n'
         << "left=" << (first_left ? "first" : "second") << '\n'
         << "right=" << (first_left ? "second" : "first") << '\n'
         << "px_per_m=" << g9(scale) << '\n'
         << "h=" << g9(h) << '\n'
         << "axis_left_px=" << g9(X(axis_l)) << '\n'
         << "axis_right_px=" << g9(X(axis_r)) << '\n'
         << "z0_px=" << g9(Y(0.0)) << '\n'
         << "first_c0=" << g9(p1.c0) << '\n'
         << "first_c1=" << g9(p1.c1) << '\n'
         << "first_c2=" << g9(p1.c2) << '\n'
         << "second_c0=" << g9(p2.c0) << '\n'
         << "second_c1=" << g9(p2.c1) << '\n'
         << "second_c2=" << g9(p2.c2) << '\n';

    std::ostringstream out;
    out << svg_open(width_m * scale, height_m * scale, meta.str());
    out << "<rect x=\"0\" y=\"0\" width=\"" << g9(width_m * scale) << "\" height=\""
        << g9(height_m * scale) << "\" fill=\"#fbfaf7\"/>\n";

    const ColumnProfile* shafts[2] = {left, right};
    const double axes[2] = {axis_l, axis_r};
    const char* names[2] = {"left", "right"};
    for (int k = 0; k < 2; ++k) {
        std::vector<std::array<double, 2>> lpts, rpts;
        for (int i = 0; i <= n_shaft; ++i) {
            const double z = h * i / n_shaft;
            const double r = radius_at(*shafts[k], z);
            lpts.push_back({X(axes[k] - r), Y(z)});
            rpts.push_back({X(axes[k] + r), Y(z)});
        }
        const std::string style = "fill=\"none\" stroke=\"#2c2c2c\" stroke-width=\"1.5\"";
        emit_points(out, "polyline", lpts,
                    "id=\"outline_left_" + std::string(names[k]) + "\" " + style);
        emit_points(out, "polyline", rpts,
                    "id=\"outline_right_" + std::string(names[k]) + "\" " + style);
        emit_line(out, lpts.front()[0], Y(0.0), rpts.front()[0], Y(0.0), style);
        emit_line(out, lpts.back()[0], Y(h), rpts.back()[0], Y(h), style);
    }

    out << "</svg>\n";
    return out.str();
}

std::string vantage_svg(const VantageMap& map, Facade facade, double cell_px) {
    if (!(cell_px > 0.0)) throw std::invalid_argument("cell size must be positive");
    const char* color_none = "#eceae4";
    const char* color_one = "#5b84c4";
    const char* color_both = "#7d3fa0";
    const char* color_masked = "#b9b1a2";

    const double W = map.nx * cell_px, H = map.ny * cell_px;
    std::ostringstream meta;
    meta << "kind=vantage\n"
         << "facade=" << facade_name(facade) << '\n'
         << "cell_m=" << g9(map.cell) << '\n'
         << "n_rays=" << map.n_rays << '\n'
         << "nx=" << map.nx << '\n'
         << "ny=" << map.ny << '\n'
         << "x_min=" << g9(map.extent.x_min) << '\n'
         << "x_max=" << g9(map.extent.x_max) << '\n'
         << "y_min=" << g9(map.extent.y_min) << '\n'
         << "y_max=" << g9(map.extent.y_max) << '\n'
         << "color_none=" << color_none << '\n'
         << "color_one=" << color_one << '\n'
         << "color_both=" << color_both << '\n'
         << "color_masked=" << color_masked << '\n';

    std::ostringstream out;
    out << svg_open(W, H, meta.str());
    out << "<rect x=\"0\" y=\"0\" width=\"" << g9(W) << "\" height=\"" << g9(H)
        << "\" fill=\"" << color_none << "\"/>\n";

    for (int iy = 0; iy < map.ny; ++iy) {
        const double row_y = (map.ny - 1 - iy) * cell_px;
        int ix = 0;
        while (ix < map.nx) {
            const int cls = map.facade_class(facade, ix, iy);
            int end = ix + 1;
            while (end < map.nx && map.facade_class(facade, end, iy) == cls) ++end;
            if (cls != 0) {
                const char* color = cls == 2 ? color_both
                                  : cls == 1 ? color_one
                                             : color_masked;
                out << "<rect x=\"" << g9(ix * cell_px) << "\" y=\"" << g9(row_y)
                    << "\" width=\"" << g9((end - ix) * cell_px) << "\" height=\""
                    << g9(cell_px) << "\" fill=\"" << color << "\"/>\n";
            }
            ix = end;
        }
    }

    out << "</svg>\n";
    return out.str();
}

IllusionKind illusion_kind_from_name(const std::string& name) {
    if (name == "hering") return IllusionKind::hering;
    if (name == "wundt") return IllusionKind::wundt;
    if (name == "combined") return IllusionKind::combined;
    if (name == "perpendicular") return IllusionKind::perpendicular;
    if (name == "zollner") return IllusionKind::zollner;
    throw std::invalid_argument("unknown illusion kind: " + name);
}

const char* illusion_kind_name(IllusionKind k) {
    switch (k) {
        case IllusionKind::hering: return "hering";
        case IllusionKind::wundt: return "wundt";
        case IllusionKind::combined: return "combined";
        case IllusionKind::perpendicular: return "perpendicular";
        case IllusionKind::zollner: return "zollner";
    }
    return "?";
}

}  // namespace arx
