#pragma once

#include "arx/column.hpp"
#include "arx/physics.hpp"
#include "arx/stylobate.hpp"
#include "arx/visibility.hpp"

namespace arx::presets {

// least-squares interpolation of the platform survey, meters
StylobateSurface parthenon_surface();
BoundarySet parthenon_boundaries();

// Penrose's measured tapering law; the height puts the maximal chord
// deviation at mid-shaft
ColumnProfile penrose_profile();
FluteSpec doric_flutes();

// same end radii as p, zero bow
ColumnProfile straight_taper(const ColumnProfile& p);

Footprint parthenon_footprint();
FilmFlow stylobate_runoff();   // light rain residue draining off the platform
BucklingCase marble_column();  // Pentelic marble shaft under the entablature

}  // namespace arx::presets
