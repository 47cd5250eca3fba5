#include "arx/physics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arx {

namespace {

void check_flow(const FilmFlow& f) {
    if (!(f.theta > 0.0 && f.nu > 0.0 && f.g > 0.0 && f.h0 > 0.0 && f.L > 0.0))
        throw std::invalid_argument("film parameters must be strictly positive");
    if (!(f.theta < 0.05))
        throw std::invalid_argument(
            "slope too steep for the laminar shallow-film assumption (needs theta < 0.05 rad)");
}

}  // namespace

FilmState film_state(const FilmFlow& flow, double h) {
    check_flow(flow);
    if (!(h > 0.0 && h <= flow.h0))
        throw std::invalid_argument("film thickness must lie in (0, h0]");
    FilmState out;
    out.U = flow.g * std::sin(flow.theta) * h * h / (3.0 * flow.nu);
    out.q = out.U * h;
    return out;
}

double drainage_time(const FilmFlow& flow) {
    check_flow(flow);
    const double mean_U = flow.g * std::sin(flow.theta) * flow.h0 * flow.h0 / (9.0 * flow.nu);
    return flow.L / mean_U;
}

BucklingReport buckling_report(const BucklingCase& c) {
    if (!(c.E > 0.0 && c.L > 0.0 && c.r > 0.0 && c.sigma_crush > 0.0))
        throw std::invalid_argument("buckling parameters must be strictly positive");
    const double pi = std::numbers::pi;
    BucklingReport out;
    out.P_cr = pi * pi * pi * c.r * c.r * c.r * c.r * c.E / (4.0 * c.L * c.L);
    out.sigma_cr = out.P_cr / (pi * c.r * c.r);
    out.mode = out.sigma_cr > c.sigma_crush ? FailureMode::crush : FailureMode::buckle;
    out.slenderness = c.L / c.r;
    out.euler_marginal = out.slenderness < 20.0;
    return out;
}

const char* failure_mode_name(FailureMode m) {
    return m == FailureMode::crush ? "crush" : "buckle";
}

}  // namespace arx
