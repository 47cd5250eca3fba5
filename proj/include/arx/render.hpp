#pragma once

#include <string>

#include "arx/column.hpp"
#include "arx/stylobate.hpp"
#include "arx/visibility.hpp"

namespace arx {

// Deterministic SVG documents. Every coordinate derives from the owning
// geometry module; metadata goes into a leading XML comment as key=value
// lines so tests and readers can parse the ground truth back out.

struct FacadeSpec {
    int n_columns = 8;
    ColumnProfile column;      // see presets::penrose_profile
    ParabolicArc stylobate;    // platform top profile along the facade
    double tilt_deg = 0.4;     // inward lean of the column axes
    bool entasis = true;       // bowed shaft outline vs straight taper
    bool curvature = true;     // curved platform/entablature vs level
    double px_per_m = 10.0;
};

std::string facade_svg(const FacadeSpec& spec);

enum class IllusionKind { hering, wundt, combined, perpendicular, zollner };

struct IllusionSpec {
    IllusionKind kind = IllusionKind::hering;
    int fan_count = 12;           // modifier lines per fan
    double angle_min_deg = 10.0;  // fan angle range, within (0, 90]
    double angle_max_deg = 90.0;
    double target_offset = 40.0;  // px from mid-height to each target line
    double tilt_deg = 0.4;        // inclination used by the perpendicular kind
    double width = 400.0;
    double height = 400.0;
};

std::string illusion_svg(const IllusionSpec& spec);

struct PairSpec {
    double px_per_m = 40.0;
    unsigned seed = 0;  // decides left/right placement; recorded in metadata
};

// side-by-side shaft outlines at identical scale for a blind comparison
std::string profile_pair_svg(const ColumnProfile& p1, const ColumnProfile& p2,
                             const PairSpec& spec);

// color-coded plan map of one facade's corner visibility classes
std::string vantage_svg(const VantageMap& map, Facade facade, double cell_px = 2.0);

IllusionKind illusion_kind_from_name(const std::string& name);
const char* illusion_kind_name(IllusionKind k);

}  // namespace arx
