#pragma once

#include <string>

#include "hypsurf/diagram.hpp"
#include "hypsurf/involution.hpp"
#include "hypsurf/surface.hpp"

namespace hypsurf {

// Deterministic SVG pictures: repeated renders of equal inputs are
// byte-identical.  Coordinates are 12-digit decimal approximations of the
// exact values; they are never read back into computations.

// Polygons with numbered gluing labels (one number per glued pair), red
// boundary edges, marked corners, and certificate points.  When an
// involution is given and verifies, its fixed points are drawn as well.
std::string render_surface_svg(const Surface& s, const Involution* inv = nullptr);

// Vertices on a circle (filled = periodic, hollow = minimal), full edges as
// chords, free half-edges as outward stubs, dotted stubs dashed.
std::string render_diagram_svg(const Diagram& dg);

}  // namespace hypsurf
