#pragma once

#include <optional>

#include "arx/mesh.hpp"

namespace arx {

// tapering law r(z) = c0 + c1 z + c2 z^2 on [0, h]
struct ColumnProfile {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
    double h = 0.0;
};

struct FluteSpec {
    double alpha = 6.4;
    double beta = 2.25;
    int n_flutes = 20;
    // normalize by the full period 2*pi/n instead of the half period;
    // with this on, the ridges no longer reach the tapering radius
    bool full_period_denominator = false;
};

struct ColumnSurface {
    ColumnProfile profile;
    std::optional<FluteSpec> flutes;
};

double radius_at(const ColumnProfile& p, double z);

struct EntasisDeviation {
    double z_star = 0.0;  // where the profile departs most from its chord, m
    double delta = 0.0;   // signed: positive bulges outward, m
};
EntasisDeviation entasis_deviation(const ColumnProfile& p);

// dimensionless flute law, periodic with period 2*pi/n_flutes, grooves
// centered on theta = 0, equal to 1 at the ridges
double flute_factor(const FluteSpec& f, double theta);

double flute_radius(const ColumnSurface& s, double theta, double z);

// triangulated shaft surface; n_theta must resolve the flutes
Mesh column_mesh(const ColumnSurface& s, int n_theta, int n_z);

}  // namespace arx
