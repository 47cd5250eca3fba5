#pragma once

namespace arx {

// gravity-driven laminar film on a gently sloped plane
struct FilmFlow {
    double theta = 0.0;  // slope, rad; must stay in the shallow regime
    double nu = 1e-6;    // kinematic viscosity, m^2/s
    double g = 9.81;     // m/s^2
    double h0 = 0.0;     // initial film thickness, m
    double L = 0.0;      // runoff distance, m
};

struct FilmState {
    double U = 0.0;  // depth-averaged velocity, m/s
    double q = 0.0;  // flux per unit width, m^2/s
};

FilmState film_state(const FilmFlow& flow, double h);

// time to drain the initial film over distance L
double drainage_time(const FilmFlow& flow);

enum class FailureMode { crush, buckle };

struct BucklingCase {
    double E = 0.0;              // Young's modulus, Pa
    double L = 0.0;              // column height, m
    double r = 0.0;              // radius, m
    double sigma_crush = 100e6;  // compressive strength, Pa
};

struct BucklingReport {
    double P_cr = 0.0;           // elastic critical load, N
    double sigma_cr = 0.0;       // critical stress, Pa
    FailureMode mode = FailureMode::crush;
    double slenderness = 0.0;    // L / r
    bool euler_marginal = false; // slenderness below 20: the elastic theory
                                 // itself is marginal for such stocky shafts
};

BucklingReport buckling_report(const BucklingCase& c);

const char* failure_mode_name(FailureMode m);

}  // namespace arx
