#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace arx {

struct Sample1D {
    double s = 0.0;  // chord coordinate, m
    double v = 0.0;  // elevation or radius, m
};

enum class CurveFamily { parabola, circle, catenary };

struct FittedCurve {
    CurveFamily family = CurveFamily::parabola;

    // parabola v(s) = c0 + c1 s + c2 s^2; also the evaluation rule when a
    // circle fit degenerates to parabola_equivalent
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;

    // circle (s - s0)^2 + (v - v0)^2 = R^2; branch +1 evaluates the arc
    // above the center, -1 below
    double s0 = 0.0, v0 = 0.0, R = 0.0;

    // catenary v(s) = v0 + branch * a0 * cosh((s - s0) / a0)
    double a0 = 0.0;

    int branch = 1;
    bool parabola_equivalent = false;

    double rms_residual = 0.0;  // rms of vertical residuals, m
    double s_min = 0.0, s_max = 0.0;

    double eval(double s) const;
};

// iterative fit hit its iteration cap; carries the best iterate reached
struct FitError : std::runtime_error {
    FitError(const std::string& msg, FittedCurve best_iterate)
        : std::runtime_error(msg), best(best_iterate) {}
    FittedCurve best;
};

FittedCurve fit_curve(CurveFamily family, const std::vector<Sample1D>& samples);

// max |curve(s) - chord(s)| over the domain, chord joining the endpoint values
double sagitta(const FittedCurve& curve);

// rms of (v_i - curve(s_i)) recomputed from the returned parameters
double rms_against(const FittedCurve& curve, const std::vector<Sample1D>& samples);

// CSV with header "s,v", units meters
std::vector<Sample1D> read_samples_csv(std::istream& in);

const char* family_name(CurveFamily f);
CurveFamily family_from_name(const std::string& name);

}  // namespace arx
