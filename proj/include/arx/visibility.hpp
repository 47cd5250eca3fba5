#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace arx {

// Plan-view occlusion model. The building is a rectangle [0,a] x [0,b]
// whose perimeter strip of width band_depth is an open colonnade; the
// interior beyond the strip is a solid core. The four corner columns are
// discs. A corner column reads "against sky" from a viewer point when the
// viewer is beyond one of that corner's two facade planes and every
// sampled sight ray across the disc silhouette is clear of the core and
// of the other three discs, both in front of the disc and beyond it.
struct Footprint {
    double a = 30.9;                     // width, m
    double b = 69.5;                     // length, m
    double corner_column_radius = 0.9735;
    double column_inset = 0.9735;        // center distance from each edge
    // open walkway depth around the rim; kept independent of the column
    // radius so shrinking the columns leaves the occluder unchanged
    double band_depth = 3.894;
};

enum class Corner { se, ne, nw, sw };
enum class Facade { east, west, south, north };
enum class VantageClass { none, one, both };

// sampling is a midpoint rule over the disc's angular extent; refining
// the count by an odd factor keeps earlier rays as a subset
bool corner_against_sky(const Footprint& fp, double px, double py, Corner corner,
                        int n_rays = 64);

VantageClass classify_vantage(const Footprint& fp, double px, double py, Facade facade,
                              int n_rays = 64);

struct Extent {
    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
};

Extent centered_extent(const Footprint& fp, double width, double height);

// Cell-centered raster of per-corner classifications.
// Codes: 1 against sky, 0 blocked, -1 masked (cell center on the
// footprint or inside a column disc).
struct VantageMap {
    Extent extent;
    double cell = 0.0;
    int nx = 0, ny = 0;
    int n_rays = 0;
    std::array<std::vector<std::int8_t>, 4> corner_sky;  // indexed by Corner

    std::size_t index(int ix, int iy) const {
        return std::size_t(iy) * std::size_t(nx) + std::size_t(ix);
    }
    double cell_x(int ix) const;
    double cell_y(int iy) const;
    // 0, 1, 2 corners against sky, or -1 when masked
    int facade_class(Facade f, int ix, int iy) const;
    double both_area(Facade f) const;  // m^2
    void write_csv(std::ostream& out, Facade f) const;
};

// Rasterizes the whole extent. When the extent is centered on the
// footprint the grid is mirror-symmetric and the three mirrored corners
// are derived from the first by index reflection, which makes the map's
// dihedral symmetry exact.
VantageMap vantage_map(const Footprint& fp, const Extent& extent, double cell,
                       int n_rays = 64);

std::array<Corner, 2> facade_corners(Facade f);
const char* facade_name(Facade f);
const char* corner_name(Corner c);
Facade facade_from_name(const std::string& name);

}  // namespace arx
