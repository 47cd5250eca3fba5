#pragma once

#include "arx/curvefit.hpp"

namespace arx {

struct AngularThreshold {
    double arcsec = 0.0;
    double radians() const;
};

// quoted visual-acuity bands; the wide band is the conservative default
namespace thresholds {
inline constexpr AngularThreshold hyperacuity_min{3.0};
inline constexpr AngularThreshold hyperacuity_max{18.0};
inline constexpr AngularThreshold conservative_min{120.0};
inline constexpr AngularThreshold conservative_max{420.0};
}  // namespace thresholds

struct PlacedText {
    double H = 0.0;  // center height above eye level, m
    double h = 0.0;  // letter height, m
    double D = 0.0;  // horizontal viewing distance, m
};

// smallest chord-to-arc deviation visible from distance D
double critical_sagitta(double D, AngularThreshold threshold);

struct Detectability {
    bool detectable = false;
    double margin = 0.0;  // sagitta minus critical sagitta, m
};
Detectability is_detectable(const FittedCurve& curve, double D, AngularThreshold threshold);

// angle subtended by an object of extent h at distance d
double visual_angle(double h, double d);

// letter height subtending theta when read from ground distance D at
// elevation H above eye level
double scaled_letter_height(double H, double D, double theta);

enum class EqualizeStatus { unique, every_distance, none };
struct EqualizeResult {
    EqualizeStatus status = EqualizeStatus::none;
    double distance = 0.0;  // valid when status == unique
};
// the ground distance from which two text rows subtend equal angles
EqualizeResult equalization_distance(const PlacedText& row1, const PlacedText& row2);

// height at which inward-tilted verticals of the given half-span meet
double tilt_convergence_height(double half_span, double tilt_deg);

// body-height to head-height ratio expected for a given stature
double expected_bhr(double stature_cm);

}  // namespace arx
