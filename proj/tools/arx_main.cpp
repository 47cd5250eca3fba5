#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arx/column.hpp"
#include "arx/curvefit.hpp"
#include "arx/mesh.hpp"
#include "arx/numfmt.hpp"
#include "arx/perception.hpp"
#include "arx/physics.hpp"
#include "arx/presets.hpp"
#include "arx/render.hpp"
#include "arx/stylobate.hpp"
#include "arx/version.hpp"
#include "arx/visibility.hpp"

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    bool json = false;
    std::string command;
    std::string preset;
    std::vector<std::pair<std::string, std::string>> params;
    ordered_json result = ordered_json::object();
    std::vector<std::string> lines;

    void param(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
    }
    void param(const std::string& key, double value) { param(key, arx::g9(value)); }
    void param(const std::string& key, int value) { param(key, std::to_string(value)); }

    void put(const std::string& key, double value, const std::string& unit = "") {
        result[key] = value;
        lines.push_back(key + " = " + arx::g9(value) + (unit.empty() ? "" : " " + unit));
    }
    void put(const std::string& key, const std::string& value) {
        result[key] = value;
        lines.push_back(key + " = " + value);
    }
    void put(const std::string& key, bool value) {
        result[key] = value;
        lines.push_back(key + " = " + (value ? "true" : "false"));
    }
    void put(const std::string& key, long value) {
        result[key] = value;
        lines.push_back(key + " = " + std::to_string(value));
    }
    void note(const std::string& text) { lines.push_back("note: " + text); }

    void print(std::ostream& out) const {
        if (json) {
            ordered_json doc;
            doc["version"] = arx::kVersion;
            doc["command"] = command;
            doc["preset"] = preset.empty() ? "none" : preset;
            ordered_json p = ordered_json::object();
            for (const auto& [k, v] : params) p[k] = v;
            doc["parameters"] = p;
            doc["result"] = result;
            out << doc.dump(2) << '\n';
            return;
        }
        out << "# arx " << arx::kVersion << '\n';
        out << "# command: " << command << '\n';
        out << "# preset: " << (preset.empty() ? "none" : preset) << '\n';
        std::string joined;
        for (const auto& [k, v] : params) {
            if (!joined.empty()) joined += ' ';
            joined += k + "=" + v;
        }
        out << "# parameters: " << (joined.empty() ? "(defaults)" : joined) << '\n';
        for (const auto& line : lines) out << line << '\n';
    }
};

double parse_angle_arcsec(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("angle '" + text + "' is not a number with a unit suffix");
    }
    const std::string suffix = text.substr(used);
    if (suffix == "arcsec") return value;
    if (suffix == "arcmin") return value * 60.0;
    if (suffix == "deg") return value * 3600.0;
    throw UsageError("angle '" + text +
                     "' needs a unit suffix: arcsec, arcmin, or deg");
}

std::string humanize_seconds(double s) {
    std::ostringstream out;
    if (s >= 3600.0)
        out << arx::g9(s / 3600.0) << " h";
    else if (s >= 60.0)
        out << arx::g9(s / 60.0) << " min";
    else
        out << arx::g9(s) << " s";
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::string require_out(const std::string& out_path, const char* what) {
    if (out_path.empty())
        throw UsageError(std::string("--out is required to write the ") + what);
    return out_path;
}

arx::FittedCurve arc_as_curve(const arx::ParabolicArc& arc) {
    arx::FittedCurve c;
    c.family = arx::CurveFamily::parabola;
    c.c0 = arc.c0;
    c.c1 = arc.c1;
    c.c2 = arc.c2;
    c.s_min = 0.0;
    c.s_max = arc.length;
    return c;
}

void describe_fit(Report& rep, const arx::FittedCurve& fit) {
    rep.put("family", std::string(arx::family_name(fit.family)));
    switch (fit.family) {
        case arx::CurveFamily::parabola:
            rep.put("c0", fit.c0, "m");
            rep.put("c1", fit.c1);
            rep.put("c2", fit.c2, "1/m");
            break;
        case arx::CurveFamily::circle:
            rep.put("parabola_equivalent", fit.parabola_equivalent);
            if (fit.parabola_equivalent) {
                rep.put("c0", fit.c0, "m");
                rep.put("c1", fit.c1);
                rep.put("c2", fit.c2, "1/m");
                rep.put("R", std::string("inf"));
            } else {
                rep.put("s0", fit.s0, "m");
                rep.put("v0", fit.v0, "m");
                rep.put("R", fit.R, "m");
                rep.put("branch", long(fit.branch));
            }
            break;
        case arx::CurveFamily::catenary:
            rep.put("a0", fit.a0, "m");
            rep.put("s0", fit.s0, "m");
            rep.put("v0", fit.v0, "m");
            rep.put("branch", long(fit.branch));
            break;
    }
    rep.put("rms_residual", fit.rms_residual, "m");
    rep.put("sagitta", arx::sagitta(fit), "m");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometry, perception, and physics toolkit for a classical platform"};
    app.require_subcommand(1);
    app.fallthrough();

    Report rep;
    std::string out_path;
    unsigned seed = 0;
    app.add_flag("--json", rep.json, "machine-readable output");
    app.add_option("--out", out_path, "output file for meshes, maps, and figures");
    app.add_option("--seed", seed, "seed for randomized document layout");

    std::function<void()> action;

    // ---- stylobate ----------------------------------------------------
    auto* sty = app.add_subcommand("stylobate", "platform surface operations");
    sty->require_subcommand(1);
    sty->fallthrough();

    {
        auto* sub = sty->add_subcommand("eval", "surface elevation at a plan point");
        sub->fallthrough();
        auto x = std::make_shared<double>(0.0);
        auto y = std::make_shared<double>(0.0);
        sub->add_option("--x", *x, "plan x, m")->required();
        sub->add_option("--y", *y, "plan y, m")->required();
        sub->callback([&, x, y] {
            action = [&, x, y] {
                rep.command = "stylobate eval";
                rep.preset = "parthenon";
                rep.param("x", *x);
                rep.param("y", *y);
                const auto s = arx::presets::parthenon_surface();
                rep.put("z", arx::elevation(s, *x, *y), "m");
            };
        });
    }
    {
        auto* sub = sty->add_subcommand("crown", "interior high point of the surface");
        sub->fallthrough();
        sub->callback([&] {
            action = [&] {
                rep.command = "stylobate crown";
                rep.preset = "parthenon";
                const auto crown = arx::find_crown(arx::presets::parthenon_surface());
                rep.put("x", crown.x, "m");
                rep.put("y", crown.y, "m");
                rep.put("z", crown.z, "m");
                rep.put("grad_norm", crown.grad_norm);
            };
        });
    }
    {
        auto* sub = sty->add_subcommand("slopes", "mean absolute side slopes");
        sub->fallthrough();
        sub->callback([&] {
            action = [&] {
                rep.command = "stylobate slopes";
                rep.preset = "parthenon";
                const auto s = arx::presets::parthenon_surface();
                const double e = arx::side_mean_slope_deg(s, arx::Side::east);
                const double w = arx::side_mean_slope_deg(s, arx::Side::west);
                const double so = arx::side_mean_slope_deg(s, arx::Side::south);
                const double n = arx::side_mean_slope_deg(s, arx::Side::north);
                rep.put("east_deg", e, "deg");
                rep.put("west_deg", w, "deg");
                rep.put("south_deg", so, "deg");
                rep.put("north_deg", n, "deg");
                rep.put("east_west_mean_deg", 0.5 * (e + w), "deg");
                rep.put("north_south_mean_deg", 0.5 * (so + n), "deg");
            };
        });
    }
    {
        auto* sub = sty->add_subcommand("mesh", "export the surface as a quad mesh");
        sub->fallthrough();
        auto nx = std::make_shared<int>(64);
        auto ny = std::make_shared<int>(144);
        sub->add_option("--nx", *nx, "cells across the width");
        sub->add_option("--ny", *ny, "cells along the length");
        sub->callback([&, nx, ny] {
            action = [&, nx, ny] {
                rep.command = "stylobate mesh";
                rep.preset = "parthenon";
                rep.param("nx", *nx);
                rep.param("ny", *ny);
                const auto path = require_out(out_path, "mesh");
                const auto mesh =
                    arx::export_mesh(arx::presets::parthenon_surface(), *nx, *ny);
                write_file(path, mesh.to_string());
                rep.put("out", path);
                rep.put("vertices", long(mesh.vertices.size()));
                rep.put("faces", long(mesh.faces.size()));
            };
        });
    }
    {
        auto* sub = sty->add_subcommand("fit", "fit a curve family to s,v samples");
        sub->fallthrough();
        auto family = std::make_shared<std::string>();
        auto samples_path = std::make_shared<std::string>();
        sub->add_option("--family", *family, "parabola, circle, or catenary")->required();
        sub->add_option("--samples", *samples_path, "CSV file with header s,v ('-' = stdin)")
            ->required();
        sub->callback([&, family, samples_path] {
            action = [&, family, samples_path] {
                rep.command = "stylobate fit";
                rep.preset.clear();
                rep.param("family", *family);
                rep.param("samples", *samples_path);
                std::vector<arx::Sample1D> samples;
                if (*samples_path == "-") {
                    samples = arx::read_samples_csv(std::cin);
                } else {
                    std::ifstream in(*samples_path);
                    if (!in) throw std::runtime_error("cannot open " + *samples_path);
                    samples = arx::read_samples_csv(in);
                }
                const auto fit =
                    arx::fit_curve(arx::family_from_name(*family), samples);
                rep.put("samples_read", long(samples.size()));
                describe_fit(rep, fit);
            };
        });
    }

    // ---- column -------------------------------------------------------
    auto* col = app.add_subcommand("column", "shaft profile operations");
    col->require_subcommand(1);
    col->fallthrough();

    {
        auto* sub = col->add_subcommand("radius", "shaft radius at a height");
        sub->fallthrough();
        auto z = std::make_shared<double>(0.0);
        auto theta = std::make_shared<std::string>();
        auto fluted = std::make_shared<bool>(false);
        sub->add_option("--z", *z, "height above the base, m")->required();
        sub->add_flag("--fluted", *fluted, "apply the fluting law");
        sub->add_option("--theta", *theta,
                        "angle around the shaft (with unit suffix), grooves at 0");
        sub->callback([&, z, theta, fluted] {
            action = [&, z, theta, fluted] {
                rep.command = "column radius";
                rep.preset = "parthenon";
                rep.param("z", *z);
                const auto profile = arx::presets::penrose_profile();
                rep.put("radius", arx::radius_at(profile, *z), "m");
                if (*fluted) {
                    const double arcsec =
                        theta->empty() ? 0.0 : parse_angle_arcsec(*theta);
                    const double rad = arx::AngularThreshold{arcsec}.radians();
                    rep.param("theta_arcsec", arcsec);
                    arx::ColumnSurface surf{profile, arx::presets::doric_flutes()};
                    rep.put("fluted_radius", arx::flute_radius(surf, rad, *z), "m");
                }
            };
        });
    }
    {
        auto* sub = col->add_subcommand("entasis", "largest bow of the tapering profile");
        sub->fallthrough();
        sub->callback([&] {
            action = [&] {
                rep.command = "column entasis";
                rep.preset = "parthenon";
                const auto dev =
                    arx::entasis_deviation(arx::presets::penrose_profile());
                rep.put("z_star", dev.z_star, "m");
                rep.put("delta", dev.delta, "m");
                rep.put("delta_mm", dev.delta * 1000.0, "mm");
            };
        });
    }
    {
        auto* sub = col->add_subcommand("mesh", "export the shaft as a triangle mesh");
        sub->fallthrough();
        auto n_theta = std::make_shared<int>(160);
        auto n_z = std::make_shared<int>(64);
        auto plain = std::make_shared<bool>(false);
        auto full_period = std::make_shared<bool>(false);
        sub->add_option("--n-theta", *n_theta, "angular samples");
        sub->add_option("--n-z", *n_z, "rings along the shaft");
        sub->add_flag("--plain", *plain, "suppress the fluting");
        sub->add_flag("--full-period-denominator", *full_period,
                      "normalize flutes by the full period");
        sub->callback([&, n_theta, n_z, plain, full_period] {
            action = [&, n_theta, n_z, plain, full_period] {
                rep.command = "column mesh";
                rep.preset = "parthenon";
                rep.param("n_theta", *n_theta);
                rep.param("n_z", *n_z);
                const auto path = require_out(out_path, "mesh");
                arx::ColumnSurface surf{arx::presets::penrose_profile(), std::nullopt};
                if (!*plain) {
                    auto flutes = arx::presets::doric_flutes();
                    flutes.full_period_denominator = *full_period;
                    surf.flutes = flutes;
                }
                const auto mesh = arx::column_mesh(surf, *n_theta, *n_z);
                write_file(path, mesh.to_string());
                rep.put("out", path);
                rep.put("vertices", long(mesh.vertices.size()));
                rep.put("faces", long(mesh.faces.size()));
                rep.put("fluted", !*plain);
            };
        });
    }

    // ---- perceive -----------------------------------------------------
    auto* per = app.add_subcommand("perceive", "visual geometry estimates");
    per->require_subcommand(1);
    per->fallthrough();

    {
        auto* sub = per->add_subcommand("sagitta", "smallest visible chord deviation");
        sub->fallthrough();
        auto D = std::make_shared<double>(25.0);
        auto threshold = std::make_shared<std::string>("420arcsec");
        sub->add_option("--D", *D, "viewing distance, m")->required();
        sub->add_option("--threshold", *threshold, "angular threshold with unit suffix");
        sub->callback([&, D, threshold] {
            action = [&, D, threshold] {
                rep.command = "perceive sagitta";
                rep.preset.clear();
                const double arcsec = parse_angle_arcsec(*threshold);
                rep.param("D", *D);
                rep.param("threshold_arcsec", arcsec);
                rep.put("critical_sagitta",
                        arx::critical_sagitta(*D, arx::AngularThreshold{arcsec}), "m");
            };
        });
    }
    {
        auto* sub = per->add_subcommand("detect",
                                        "can a platform side's bow be seen from D");
        sub->fallthrough();
        auto D = std::make_shared<double>(25.0);
        auto threshold = std::make_shared<std::string>("420arcsec");
        auto side = std::make_shared<std::string>("east");
        sub->add_option("--D", *D, "viewing distance, m")->required();
        sub->add_option("--threshold", *threshold, "angular threshold with unit suffix");
        sub->add_option("--side", *side, "east, west, south, or north")
            ->check(CLI::IsMember({"east", "west", "south", "north"}));
        sub->callback([&, D, threshold, side] {
            action = [&, D, threshold, side] {
                rep.command = "perceive detect";
                rep.preset = "parthenon";
                const double arcsec = parse_angle_arcsec(*threshold);
                rep.param("D", *D);
                rep.param("threshold_arcsec", arcsec);
                rep.param("side", *side);
                arx::Side s = arx::Side::east;
                if (*side == "west") s = arx::Side::west;
                if (*side == "south") s = arx::Side::south;
                if (*side == "north") s = arx::Side::north;
                const auto arc =
                    arx::side_arc(arx::presets::parthenon_surface(), s);
                const auto curve = arc_as_curve(arc);
                const arx::AngularThreshold thr{arcsec};
                const auto det = arx::is_detectable(curve, *D, thr);
                rep.put("sagitta", arx::sagitta(curve), "m");
                rep.put("critical_sagitta", arx::critical_sagitta(*D, thr), "m");
                rep.put("detectable", det.detectable);
                rep.put("margin", det.margin, "m");
            };
        });
    }
    {
        auto* sub = per->add_subcommand("letters",
                                        "letter height that subtends a given angle");
        sub->fallthrough();
        auto H = std::make_shared<double>(0.0);
        auto D = std::make_shared<double>(0.0);
        auto theta = std::make_shared<std::string>();
        sub->add_option("--H", *H, "center height above eye level, m")->required();
        sub->add_option("--D", *D, "horizontal distance, m")->required();
        sub->add_option("--theta", *theta, "target visual angle with unit suffix")
            ->required();
        sub->callback([&, H, D, theta] {
            action = [&, H, D, theta] {
                rep.command = "perceive letters";
                rep.preset.clear();
                const double arcsec = parse_angle_arcsec(*theta);
                rep.param("H", *H);
                rep.param("D", *D);
                rep.param("theta_arcsec", arcsec);
                rep.put("letter_height",
                        arx::scaled_letter_height(
                            *H, *D, arx::AngularThreshold{arcsec}.radians()),
                        "m");
            };
        });
    }
    {
        auto* sub = per->add_subcommand("equalize",
                                        "distance where two text rows subtend equally");
        sub->fallthrough();
        auto h1 = std::make_shared<double>(0.0);
        auto H1 = std::make_shared<double>(0.0);
        auto h2 = std::make_shared<double>(0.0);
        auto H2 = std::make_shared<double>(0.0);
        sub->add_option("--h1", *h1, "lower row letter height, m")->required();
        sub->add_option("--H1", *H1, "lower row center height, m")->required();
        sub->add_option("--h2", *h2, "upper row letter height, m")->required();
        sub->add_option("--H2", *H2, "upper row center height, m")->required();
        sub->callback([&, h1, H1, h2, H2] {
            action = [&, h1, H1, h2, H2] {
                rep.command = "perceive equalize";
                rep.preset.clear();
                rep.param("h1", *h1);
                rep.param("H1", *H1);
                rep.param("h2", *h2);
                rep.param("H2", *H2);
                arx::PlacedText r1{*H1, *h1, 1.0};
                arx::PlacedText r2{*H2, *h2, 1.0};
                const auto eq = arx::equalization_distance(r1, r2);
                switch (eq.status) {
                    case arx::EqualizeStatus::unique:
                        rep.put("status", std::string("unique"));
                        rep.put("distance", eq.distance, "m");
                        break;
                    case arx::EqualizeStatus::every_distance:
                        rep.put("status", std::string("every_distance"));
                        rep.note("identical rows subtend equally from everywhere");
                        break;
                    case arx::EqualizeStatus::none:
                        rep.put("status", std::string("none"));
                        rep.note("no finite distance equalizes these rows");
                        break;
                }
            };
        });
    }
    {
        auto* sub = per->add_subcommand("tilt", "meeting height of inward-leaning axes");
        sub->fallthrough();
        auto half_span = std::make_shared<double>(0.0);
        auto tilt = std::make_shared<std::string>("0.4deg");
        sub->add_option("--half-span", *half_span, "half the axis spacing, m")->required();
        sub->add_option("--tilt", *tilt, "inward lean with unit suffix");
        sub->callback([&, half_span, tilt] {
            action = [&, half_span, tilt] {
                rep.command = "perceive tilt";
                rep.preset.clear();
                const double tilt_deg = parse_angle_arcsec(*tilt) / 3600.0;
                rep.param("half_span", *half_span);
                rep.param("tilt_deg", tilt_deg);
                const double z = arx::tilt_convergence_height(*half_span, tilt_deg);
                rep.put("convergence_height", z, "m");
                rep.put("convergence_height_km", z / 1000.0, "km");
            };
        });
    }
    {
        auto* sub = per->add_subcommand("bhr", "body-height to head-height ratio");
        sub->fallthrough();
        auto stature = std::make_shared<double>(0.0);
        sub->add_option("--stature-cm", *stature, "stature, cm")->required();
        sub->callback([&, stature] {
            action = [&, stature] {
                rep.command = "perceive bhr";
                rep.preset.clear();
                rep.param("stature_cm", *stature);
                rep.put("ratio", arx::expected_bhr(*stature));
            };
        });
    }

    // ---- drain ----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("drain", "rain-film drainage off the platform");
        sub->fallthrough();
        auto slope_deg = std::make_shared<double>(0.2);
        auto h0_mm = std::make_shared<double>(1.0);
        auto L = std::make_shared<double>(30.0);
        auto nu = std::make_shared<double>(1e-6);
        auto grav = std::make_shared<double>(9.81);
        sub->add_option("--slope-deg", *slope_deg, "surface slope, degrees");
        sub->add_option("--h0-mm", *h0_mm, "initial film thickness, mm");
        sub->add_option("--L", *L, "runoff distance, m");
        sub->add_option("--nu", *nu, "kinematic viscosity, m^2/s");
        sub->add_option("--g", *grav, "gravity, m/s^2");
        sub->callback([&, slope_deg, h0_mm, L, nu, grav] {
            action = [&, slope_deg, h0_mm, L, nu, grav] {
                rep.command = "drain";
                rep.preset = "parthenon";
                rep.param("slope_deg", *slope_deg);
                rep.param("h0_mm", *h0_mm);
                rep.param("L", *L);
                rep.param("nu", *nu);
                rep.param("g", *grav);
                arx::FilmFlow flow;
                flow.theta = *slope_deg * std::numbers::pi / 180.0;
                flow.h0 = *h0_mm * 1e-3;
                flow.L = *L;
                flow.nu = *nu;
                flow.g = *grav;
                const auto state = arx::film_state(flow, flow.h0);
                const double td = arx::drainage_time(flow);
                rep.put("U", state.U, "m/s");
                rep.put("q", state.q, "m^2/s");
                rep.put("t_d", td, "s");
                rep.put("t_d_human", humanize_seconds(td));
            };
        });
    }

    // ---- buckle ---------------------------------------------------------
    {
        auto* sub = app.add_subcommand("buckle", "elastic buckling vs crushing");
        sub->fallthrough();
        auto E = std::make_shared<double>(40e9);
        auto L = std::make_shared<double>(10.4);
        auto r = std::make_shared<double>(0.75);
        auto sigma_crush = std::make_shared<double>(100e6);
        sub->add_option("--E", *E, "Young's modulus, Pa");
        sub->add_option("--L", *L, "column height, m");
        sub->add_option("--r", *r, "column radius, m");
        sub->add_option("--sigma-crush", *sigma_crush, "compressive strength, Pa");
        sub->callback([&, E, L, r, sigma_crush] {
            action = [&, E, L, r, sigma_crush] {
                rep.command = "buckle";
                rep.preset = "parthenon";
                rep.param("E", *E);
                rep.param("L", *L);
                rep.param("r", *r);
                rep.param("sigma_crush", *sigma_crush);
                const auto report =
                    arx::buckling_report({*E, *L, *r, *sigma_crush});
                rep.put("P_cr", report.P_cr, "N");
                rep.put("P_cr_MN", report.P_cr / 1e6, "MN");
                rep.put("sigma_cr", report.sigma_cr, "Pa");
                rep.put("sigma_cr_MPa", report.sigma_cr / 1e6, "MPa");
                rep.put("mode", std::string(arx::failure_mode_name(report.mode)));
                rep.put("slenderness", report.slenderness);
                rep.put("euler_marginal", report.euler_marginal);
                if (report.euler_marginal)
                    rep.note("slenderness below 20: elastic buckling theory is itself "
                             "marginal for such a stocky shaft");
            };
        });
    }

    // ---- visibility -----------------------------------------------------
    auto* vis = app.add_subcommand("visibility", "corner-against-sky analysis");
    vis->require_subcommand(1);
    vis->fallthrough();

    auto radius = std::make_shared<double>(arx::Footprint{}.corner_column_radius);
    auto rays = std::make_shared<int>(64);
    vis->add_option("--radius", *radius,
                    "corner column radius, m; centers stay tangent to the edges");
    vis->add_option("--rays", *rays, "sight rays per corner");

    {
        auto* sub = vis->add_subcommand("classify", "classify one viewer position");
        sub->fallthrough();
        auto x = std::make_shared<double>(0.0);
        auto y = std::make_shared<double>(0.0);
        auto facade = std::make_shared<std::string>("east");
        sub->add_option("--x", *x, "viewer plan x, m")->required();
        sub->add_option("--y", *y, "viewer plan y, m")->required();
        sub->add_option("--facade", *facade, "east, west, south, or north")
            ->check(CLI::IsMember({"east", "west", "south", "north"}));
        sub->callback([&, x, y, facade, radius, rays] {
            action = [&, x, y, facade, radius, rays] {
                rep.command = "visibility classify";
                rep.preset = "parthenon";
                rep.param("x", *x);
                rep.param("y", *y);
                rep.param("facade", *facade);
                rep.param("radius", *radius);
                rep.param("rays", *rays);
                auto fp = arx::presets::parthenon_footprint();
                fp.corner_column_radius = *radius;
                fp.column_inset = *radius;
                const arx::Corner corners[4] = {arx::Corner::se, arx::Corner::ne,
                                                arx::Corner::nw, arx::Corner::sw};
                for (arx::Corner c : corners)
                    rep.put(std::string("corner_") + arx::corner_name(c),
                            arx::corner_against_sky(fp, *x, *y, c, *rays));
                const auto cls = arx::classify_vantage(
                    fp, *x, *y, arx::facade_from_name(*facade), *rays);
                rep.put("facade_class",
                        std::string(cls == arx::VantageClass::both  ? "both"
                                    : cls == arx::VantageClass::one ? "one"
                                                                    : "none"));
            };
        });
    }
    {
        auto* sub = vis->add_subcommand("map", "raster the vantage classes");
        sub->fallthrough();
        auto cell = std::make_shared<double>(1.0);
        auto extent = std::make_shared<double>(300.0);
        auto facade = std::make_shared<std::string>("east");
        auto svg_path = std::make_shared<std::string>();
        sub->add_option("--cell", *cell, "cell size, m");
        sub->add_option("--extent", *extent, "square map side, m, centered on the plan");
        sub->add_option("--facade", *facade, "facade written to the CSV and figure")
            ->check(CLI::IsMember({"east", "west", "south", "north"}));
        sub->add_option("--svg", *svg_path, "also write a color-coded figure");
        sub->callback([&, cell, extent, facade, svg_path, radius, rays] {
            action = [&, cell, extent, facade, svg_path, radius, rays] {
                rep.command = "visibility map";
                rep.preset = "parthenon";
                rep.param("cell", *cell);
                rep.param("extent", *extent);
                rep.param("facade", *facade);
                rep.param("radius", *radius);
                rep.param("rays", *rays);
                const auto path = require_out(out_path, "class matrix");
                auto fp = arx::presets::parthenon_footprint();
                fp.corner_column_radius = *radius;
                fp.column_inset = *radius;
                const auto map = arx::vantage_map(
                    fp, arx::centered_extent(fp, *extent, *extent), *cell, *rays);
                const auto f = arx::facade_from_name(*facade);
                std::ostringstream csv;
                map.write_csv(csv, f);
                write_file(path, csv.str());
                rep.put("out", path);
                rep.put("nx", long(map.nx));
                rep.put("ny", long(map.ny));
                rep.put("both_area_east", map.both_area(arx::Facade::east), "m^2");
                rep.put("both_area_west", map.both_area(arx::Facade::west), "m^2");
                rep.put("both_area_south", map.both_area(arx::Facade::south), "m^2");
                rep.put("both_area_north", map.both_area(arx::Facade::north), "m^2");
                if (!svg_path->empty()) {
                    write_file(*svg_path, arx::vantage_svg(map, f));
                    rep.put("svg", *svg_path);
                }
            };
        });
    }

    // ---- render -----------------------------------------------------------
    auto* ren = app.add_subcommand("render", "deterministic vector figures");
    ren->require_subcommand(1);
    ren->fallthrough();

    {
        auto* sub = ren->add_subcommand("facade", "idealized front elevation");
        sub->fallthrough();
        auto columns = std::make_shared<int>(8);
        auto tilt = std::make_shared<double>(0.4);
        auto scale = std::make_shared<double>(10.0);
        auto no_curvature = std::make_shared<bool>(false);
        auto no_entasis = std::make_shared<bool>(false);
        sub->add_option("--columns", *columns, "column count");
        sub->add_option("--tilt", *tilt, "inward lean, degrees");
        sub->add_option("--scale", *scale, "pixels per meter");
        sub->add_flag("--no-curvature", *no_curvature, "level platform variant");
        sub->add_flag("--no-entasis", *no_entasis, "straight-taper shaft variant");
        sub->callback([&, columns, tilt, scale, no_curvature, no_entasis] {
            action = [&, columns, tilt, scale, no_curvature, no_entasis] {
                rep.command = "render facade";
                rep.preset = "parthenon";
                rep.param("columns", *columns);
                rep.param("tilt", *tilt);
                rep.param("scale", *scale);
                rep.param("curvature", *no_curvature ? "off" : "on");
                rep.param("entasis", *no_entasis ? "off" : "on");
                const auto path = require_out(out_path, "figure");
                arx::FacadeSpec spec;
                spec.n_columns = *columns;
                spec.column = arx::presets::penrose_profile();
                spec.stylobate =
                    arx::side_arc(arx::presets::parthenon_surface(), arx::Side::east);
                spec.tilt_deg = *tilt;
                spec.curvature = !*no_curvature;
                spec.entasis = !*no_entasis;
                spec.px_per_m = *scale;
                const auto svg = arx::facade_svg(spec);
                write_file(path, svg);
                rep.put("out", path);
                rep.put("bytes", long(svg.size()));
            };
        });
    }
    {
        auto* sub = ren->add_subcommand("illusion", "classical contrast-angle figures");
        sub->fallthrough();
        auto kind = std::make_shared<std::string>("hering");
        auto fans = std::make_shared<int>(12);
        auto amin = std::make_shared<double>(10.0);
        auto amax = std::make_shared<double>(90.0);
        auto offset = std::make_shared<double>(40.0);
        auto tilt = std::make_shared<double>(0.4);
        auto width = std::make_shared<double>(400.0);
        auto height = std::make_shared<double>(400.0);
        sub->add_option("--kind", *kind,
                        "hering, wundt, combined, perpendicular, or zollner")
            ->check(CLI::IsMember(
                {"hering", "wundt", "combined", "perpendicular", "zollner"}));
        sub->add_option("--fans", *fans, "modifier lines per fan");
        sub->add_option("--angle-min", *amin, "smallest fan angle, degrees");
        sub->add_option("--angle-max", *amax, "largest fan angle, degrees");
        sub->add_option("--offset", *offset, "target line offset, px");
        sub->add_option("--tilt", *tilt, "lean for the perpendicular kind, degrees");
        sub->add_option("--width", *width, "canvas width, px");
        sub->add_option("--height", *height, "canvas height, px");
        sub->callback([&, kind, fans, amin, amax, offset, tilt, width, height] {
            action = [&, kind, fans, amin, amax, offset, tilt, width, height] {
                rep.command = "render illusion";
                rep.preset.clear();
                rep.param("kind", *kind);
                rep.param("fans", *fans);
                const auto path = require_out(out_path, "figure");
                arx::IllusionSpec spec;
                spec.kind = arx::illusion_kind_from_name(*kind);
                spec.fan_count = *fans;
                spec.angle_min_deg = *amin;
                spec.angle_max_deg = *amax;
                spec.target_offset = *offset;
                spec.tilt_deg = *tilt;
                spec.width = *width;
                spec.height = *height;
                const auto svg = arx::illusion_svg(spec);
                write_file(path, svg);
                rep.put("out", path);
                rep.put("bytes", long(svg.size()));
            };
        });
    }
    {
        auto* sub = ren->add_subcommand("pair", "blind A/B shaft outline figure");
        sub->fallthrough();
        auto scale = std::make_shared<double>(40.0);
        sub->add_option("--scale", *scale, "pixels per meter");
        sub->callback([&, scale] {
            action = [&, scale] {
                rep.command = "render pair";
                rep.preset = "parthenon";
                rep.param("scale", *scale);
                rep.param("seed", arx::g9(double(seed)));
                const auto path = require_out(out_path, "figure");
                const auto bowed = arx::presets::penrose_profile();
                const auto straight = arx::presets::straight_taper(bowed);
                arx::PairSpec spec;
                spec.px_per_m = *scale;
                spec.seed = seed;
                const auto svg = arx::profile_pair_svg(bowed, straight, spec);
                write_file(path, svg);
                rep.put("out", path);
                rep.put("bytes", long(svg.size()));
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (!action) throw UsageError("no action selected");
        action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    rep.print(std::cout);
    return 0;
}
