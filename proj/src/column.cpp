#include "arx/column.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace arx {

double radius_at(const ColumnProfile& p, double z) {
    if (!(p.h > 0.0)) throw std::invalid_argument("shaft height must be positive");
    if (z < 0.0 || z > p.h)
        throw std::out_of_range("z outside the shaft height [0, " + std::to_string(p.h) + "]");
    return p.c0 + (p.c1 + p.c2 * z) * z;
}

EntasisDeviation entasis_deviation(const ColumnProfile& p) {
    if (!(p.h > 0.0)) throw std::invalid_argument("shaft height must be positive");
    EntasisDeviation out;
    out.z_star = p.h * 0.5;
    out.delta = -p.c2 * p.h * p.h * 0.25;
    return out;
}

double flute_factor(const FluteSpec& f, double theta) {
    if (f.n_flutes < 1) throw std::invalid_argument("need at least one flute");
    const double period = 2.0 * std::numbers::pi / f.n_flutes;
    const double theta_f = std::remainder(theta, period);
    const double half = f.full_period_denominator ? period : period * 0.5;
    return (1.0 + f.alpha * std::pow(std::fabs(theta_f), f.beta)) /
           (1.0 + f.alpha * std::pow(half, f.beta));
}

double flute_radius(const ColumnSurface& s, double theta, double z) {
    const double r = radius_at(s.profile, z);
    if (!s.flutes) return r;
    return r * flute_factor(*s.flutes, theta);
}

Mesh column_mesh(const ColumnSurface& s, int n_theta, int n_z) {
    if (n_z < 2) throw std::invalid_argument("need at least two rings along the shaft");
    if (n_theta < 3) throw std::invalid_argument("need at least three angular samples");
    if (s.flutes && n_theta < 3 * s.flutes->n_flutes)
        throw std::invalid_argument(
            "angular resolution too coarse for the fluting: need n_theta >= " +
            std::to_string(3 * s.flutes->n_flutes));

    Mesh mesh;
    mesh.vertices.reserve(std::size_t(n_theta) * std::size_t(n_z));
    for (int j = 0; j < n_z; ++j) {
        const double z = s.profile.h * j / (n_z - 1);
        for (int i = 0; i < n_theta; ++i) {
            const double theta = 2.0 * std::numbers::pi * i / n_theta;
            const double r = flute_radius(s, theta, z);
            mesh.vertices.push_back({r * std::cos(theta), r * std::sin(theta), z});
        }
    }
    auto vid = [n_theta](int i, int j) {
        return std::uint32_t(j * n_theta + (i % n_theta) + 1);
    };
    for (int j = 0; j + 1 < n_z; ++j) {
        for (int i = 0; i < n_theta; ++i) {
            mesh.add_triangle(vid(i, j), vid(i + 1, j), vid(i + 1, j + 1));
            mesh.add_triangle(vid(i, j), vid(i + 1, j + 1), vid(i, j + 1));
        }
    }
    return mesh;
}

}  // namespace arx
