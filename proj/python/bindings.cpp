#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "arx/column.hpp"
#include "arx/curvefit.hpp"
#include "arx/perception.hpp"
#include "arx/physics.hpp"
#include "arx/presets.hpp"
#include "arx/render.hpp"
#include "arx/stylobate.hpp"
#include "arx/version.hpp"
#include "arx/visibility.hpp"

namespace py = pybind11;

namespace {

arx::Side side_from(const std::string& name) {
    if (name == "east") return arx::Side::east;
    if (name == "west") return arx::Side::west;
    if (name == "south") return arx::Side::south;
    if (name == "north") return arx::Side::north;
    throw std::invalid_argument("side must be east, west, south, or north");
}

arx::Corner corner_from(const std::string& name) {
    if (name == "se") return arx::Corner::se;
    if (name == "ne") return arx::Corner::ne;
    if (name == "nw") return arx::Corner::nw;
    if (name == "sw") return arx::Corner::sw;
    throw std::invalid_argument("corner must be se, ne, nw, or sw");
}

arx::Footprint footprint_with(double radius) {
    auto fp = arx::presets::parthenon_footprint();
    if (radius > 0.0) {
        fp.corner_column_radius = radius;
        fp.column_inset = radius;
    }
    return fp;
}

py::dict fit_to_dict(const arx::FittedCurve& fit) {
    py::dict out;
    out["family"] = std::string(arx::family_name(fit.family));
    out["parabola_equivalent"] = fit.parabola_equivalent;
    out["c0"] = fit.c0;
    out["c1"] = fit.c1;
    out["c2"] = fit.c2;
    out["s0"] = fit.s0;
    out["v0"] = fit.v0;
    out["R"] = fit.R;
    out["a0"] = fit.a0;
    out["branch"] = fit.branch;
    out["rms_residual"] = fit.rms_residual;
    out["sagitta"] = arx::sagitta(fit);
    return out;
}

} // namespace

PYBIND11_MODULE(arxpy, m) {
    m.doc() = "temple platform and column geometry calculators";
    m.attr("__version__") = arx::kVersion;

    // platform surface
    m.def(
        "crown",
        []() {
            const auto c = arx::find_crown(arx::presets::parthenon_surface());
            py::dict out;
            out["x"] = c.x;
            out["y"] = c.y;
            out["z"] = c.z;
            out["grad_norm"] = c.grad_norm;
            return out;
        },
        "interior high point of the surveyed platform");
    m.def(
        "elevation",
        [](double x, double y) {
            return arx::elevation(arx::presets::parthenon_surface(), x, y);
        },
        py::arg("x"), py::arg("y"), "platform elevation at a plan point, m");
    m.def(
        "side_slope_deg",
        [](const std::string& side) {
            return arx::side_mean_slope_deg(arx::presets::parthenon_surface(),
                                            side_from(side));
        },
        py::arg("side"), "mean absolute slope along one platform side, degrees");
    m.def(
        "side_profile",
        [](const std::string& side) {
            const auto arc =
                arx::side_arc(arx::presets::parthenon_surface(), side_from(side));
            return py::make_tuple(arc.c0, arc.c1, arc.c2, arc.length);
        },
        py::arg("side"), "quadratic side profile (c0, c1, c2, length)");

    // curve fitting
    m.def(
        "fit_curve",
        [](const std::string& family, const std::vector<std::pair<double, double>>& samples) {
            std::vector<arx::Sample1D> pts;
            pts.reserve(samples.size());
            for (const auto& [s, v] : samples) pts.push_back({s, v});
            return fit_to_dict(arx::fit_curve(arx::family_from_name(family), pts));
        },
        py::arg("family"), py::arg("samples"),
        "least-squares fit of parabola, circle, or catenary to (s, v) samples");

    // column shaft
    m.def(
        "shaft_radius",
        [](double z, bool fluted, double theta) {
            arx::ColumnSurface s{arx::presets::penrose_profile(),
                                 fluted ? std::optional<arx::FluteSpec>(
                                              arx::presets::doric_flutes())
                                        : std::nullopt};
            return arx::flute_radius(s, theta, z);
        },
        py::arg("z"), py::arg("fluted") = false, py::arg("theta") = 0.0,
        "measured tapering-law radius at height z, m");
    m.def(
        "entasis",
        []() {
            const auto d = arx::entasis_deviation(arx::presets::penrose_profile());
            return py::make_tuple(d.z_star, d.delta);
        },
        "(height, bow) of the largest chord deviation of the shaft profile");

    // perception
    m.def(
        "critical_sagitta",
        [](double D, double arcsec) {
            return arx::critical_sagitta(D, arx::AngularThreshold{arcsec});
        },
        py::arg("D"), py::arg("arcsec") = 420.0,
        "smallest chord-to-arc deviation visible from D meters");
    m.def("visual_angle", &arx::visual_angle, py::arg("h"), py::arg("d"),
          "angle subtended by extent h at distance d, rad");
    m.def("scaled_letter_height", &arx::scaled_letter_height, py::arg("H"), py::arg("D"),
          py::arg("theta"), "letter height subtending theta from ground distance D");
    m.def(
        "equalization_distance",
        [](double h1, double H1, double h2, double H2) {
            const auto r = arx::equalization_distance({H1, h1, 0.0}, {H2, h2, 0.0});
            const char* status = r.status == arx::EqualizeStatus::unique ? "unique"
                                 : r.status == arx::EqualizeStatus::every_distance
                                     ? "every_distance"
                                     : "none";
            return py::make_tuple(status, r.distance);
        },
        py::arg("h1"), py::arg("H1"), py::arg("h2"), py::arg("H2"),
        "ground distance from which two text rows subtend equal angles");
    m.def("tilt_convergence_height", &arx::tilt_convergence_height, py::arg("half_span"),
          py::arg("tilt_deg") = 0.4, "meeting height of inward-leaning axes, m");
    m.def("expected_bhr", &arx::expected_bhr, py::arg("stature_cm"),
          "body-height to head-height ratio for a given stature");

    // physics
    m.def(
        "drainage",
        [](double slope_deg, double h0_mm, double L, double nu, double g) {
            arx::FilmFlow flow;
            flow.theta = slope_deg * 3.14159265358979323846 / 180.0;
            flow.h0 = h0_mm * 1e-3;
            flow.L = L;
            flow.nu = nu;
            flow.g = g;
            const auto st = arx::film_state(flow, flow.h0);
            py::dict out;
            out["U"] = st.U;
            out["q"] = st.q;
            out["t_d"] = arx::drainage_time(flow);
            return out;
        },
        py::arg("slope_deg") = 0.2, py::arg("h0_mm") = 1.0, py::arg("L") = 30.0,
        py::arg("nu") = 1e-6, py::arg("g") = 9.81,
        "rain-film speed, flux, and drainage time on the platform");
    m.def(
        "buckling",
        [](double E, double L, double r, double sigma_crush) {
            const auto rep = arx::buckling_report({E, L, r, sigma_crush});
            py::dict out;
            out["P_cr"] = rep.P_cr;
            out["sigma_cr"] = rep.sigma_cr;
            out["mode"] = std::string(arx::failure_mode_name(rep.mode));
            out["slenderness"] = rep.slenderness;
            out["euler_marginal"] = rep.euler_marginal;
            return out;
        },
        py::arg("E") = 40e9, py::arg("L") = 10.4, py::arg("r") = 0.75,
        py::arg("sigma_crush") = 100e6,
        "elastic critical load of a stone shaft and its governing failure mode");

    // visibility
    m.def(
        "corner_against_sky",
        [](double x, double y, const std::string& corner, int rays, double radius) {
            return arx::corner_against_sky(footprint_with(radius), x, y,
                                           corner_from(corner), rays);
        },
        py::arg("x"), py::arg("y"), py::arg("corner"), py::arg("rays") = 64,
        py::arg("radius") = 0.0,
        "whether a corner column reads against open sky from (x, y)");
    m.def(
        "vantage_areas",
        [](double cell, double extent, int rays, double radius) {
            const auto fp = footprint_with(radius);
            const auto map =
                arx::vantage_map(fp, arx::centered_extent(fp, extent, extent), cell, rays);
            py::dict out;
            for (auto f : {arx::Facade::east, arx::Facade::west, arx::Facade::south,
                           arx::Facade::north})
                out[arx::facade_name(f)] = map.both_area(f);
            return out;
        },
        py::arg("cell") = 2.0, py::arg("extent") = 300.0, py::arg("rays") = 32,
        py::arg("radius") = 0.0,
        "area per facade from which both its corner columns read against sky, m^2");

    // figures
    m.def(
        "facade_svg",
        [](int columns, double tilt_deg, double px_per_m, bool curvature, bool entasis) {
            arx::FacadeSpec spec;
            spec.column = arx::presets::penrose_profile();
            spec.stylobate =
                arx::side_arc(arx::presets::parthenon_surface(), arx::Side::east);
            spec.n_columns = columns;
            spec.tilt_deg = tilt_deg;
            spec.px_per_m = px_per_m;
            spec.curvature = curvature;
            spec.entasis = entasis;
            return arx::facade_svg(spec);
        },
        py::arg("columns") = 8, py::arg("tilt_deg") = 0.4, py::arg("px_per_m") = 10.0,
        py::arg("curvature") = true, py::arg("entasis") = true,
        "idealized front elevation as an SVG document");
    m.def(
        "illusion_svg",
        [](const std::string& kind) {
            arx::IllusionSpec spec;
            spec.kind = arx::illusion_kind_from_name(kind);
            return arx::illusion_svg(spec);
        },
        py::arg("kind") = "hering", "classical contrast-angle figure as an SVG document");
    m.def(
        "profile_pair_svg",
        [](unsigned seed) {
            const auto bowed = arx::presets::penrose_profile();
            arx::PairSpec spec;
            spec.seed = seed;
            return arx::profile_pair_svg(bowed, arx::presets::straight_taper(bowed), spec);
        },
        py::arg("seed") = 0,
        "bowed and straight shaft outlines side by side, placement decided by the seed");
}
