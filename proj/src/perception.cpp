#include "arx/perception.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arx {

double AngularThreshold::radians() const {
    return arcsec * std::numbers::pi / (180.0 * 3600.0);
}

double critical_sagitta(double D, AngularThreshold threshold) {
    if (!(D > 0.0)) throw std::invalid_argument("viewing distance must be positive");
    if (!(threshold.arcsec > 0.0)) throw std::invalid_argument("threshold must be positive");
    return D * std::tan(threshold.radians());
}

Detectability is_detectable(const FittedCurve& curve, double D, AngularThreshold threshold) {
    const double sag = sagitta(curve);
    const double crit = critical_sagitta(D, threshold);
    Detectability out;
    out.margin = sag - crit;
    out.detectable = sag > crit;
    return out;
}

double visual_angle(double h, double d) {
    if (!(h > 0.0)) throw std::invalid_argument("object extent must be positive");
    if (!(d > 0.0)) throw std::invalid_argument("distance must be positive");
    return 2.0 * std::atan(h / (2.0 * d));
}

double scaled_letter_height(double H, double D, double theta) {
    if (!(D > 0.0)) throw std::invalid_argument("distance must be positive");
    if (!(theta > 0.0 && theta < std::numbers::pi))
        throw std::invalid_argument("angle must lie in (0, pi)");
    return 2.0 * std::sqrt(H * H + D * D) * std::tan(theta * 0.5);
}

EqualizeResult equalization_distance(const PlacedText& row1, const PlacedText& row2) {
    if (!(row1.h > 0.0 && row2.h > 0.0))
        throw std::invalid_argument("letter heights must be positive");

    EqualizeResult out;
    if (row1.h == row2.h && row1.H * row1.H == row2.H * row2.H) {
        out.status = EqualizeStatus::every_distance;
        return out;
    }

    auto gap = [&](double D) {
        return visual_angle(row1.h, std::sqrt(row1.H * row1.H + D * D)) -
               visual_angle(row2.h, std::sqrt(row2.H * row2.H + D * D));
    };

    const double lo_bound = 1e-3, hi_bound = 1e6;
    const int n = 2048;
    const double ratio = std::pow(hi_bound / lo_bound, 1.0 / n);
    double lo = lo_bound;
    double glo = gap(lo);
    double hi = 0.0, ghi = 0.0;
    bool bracketed = false;
    for (int i = 1; i <= n; ++i) {
        hi = lo_bound * std::pow(ratio, i);
        ghi = gap(hi);
        if (glo == 0.0) {
            out.status = EqualizeStatus::unique;
            out.distance = lo;
            return out;
        }
        if (glo * ghi < 0.0) {
            bracketed = true;
            break;
        }
        lo = hi;
        glo = ghi;
    }
    if (!bracketed) {
        out.status = EqualizeStatus::none;
        return out;
    }

    for (int it = 0; it < 200 && (hi - lo) > 1e-9 * lo; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = gap(mid);
        if (gm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (glo * gm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    out.status = EqualizeStatus::unique;
    out.distance = 0.5 * (lo + hi);
    return out;
}

double tilt_convergence_height(double half_span, double tilt_deg) {
    if (!(half_span > 0.0)) throw std::invalid_argument("half-span must be positive");
    if (!(tilt_deg > 0.0 && tilt_deg < 90.0))
        throw std::invalid_argument("tilt must lie in (0, 90) degrees");
    return half_span / std::tan(tilt_deg * std::numbers::pi / 180.0);
}

double expected_bhr(double stature_cm) {
    if (!(stature_cm >= 140.0 && stature_cm <= 210.0))
        throw std::domain_error("stature outside the supported 140-210 cm range");
    const double clamped = std::min(std::max(stature_cm, 165.0), 180.0);
    return 7.5 + (clamped - 165.0) * (8.0 - 7.5) / (180.0 - 165.0);
}

}  // namespace arx
