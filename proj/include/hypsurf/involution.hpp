#pragma once

#include <string>
#include <vector>

#include "hypsurf/surface.hpp"

namespace hypsurf {

// An isometric involution given polygon-by-polygon as the point map
// X -> c - X.  Polygon i is carried onto polygon poly_map[i]; centers[i]
// is the constant c for that polygon and must agree with the partner's.
struct Involution {
    std::vector<int> poly_map;
    std::vector<Vec2> centers;
};

enum class FixedPointKind { Interior, EdgeMidpoint, VertexOrbit };

struct FixedPoint {
    FixedPointKind kind;
    int poly = -1;    // Interior / EdgeMidpoint
    int edge = -1;    // EdgeMidpoint (local index)
    int orbit = -1;   // VertexOrbit
    Vec2 point;       // representative coordinates
};

struct InvolutionReport {
    bool ok = true;
    std::vector<std::string> errors;
    std::vector<FixedPoint> fixed_points;
    bool is_hyperelliptic = false;
    // rotation[i]: vertex j of polygon i maps to vertex (j - rotation[i]) mod n
    // of polygon poly_map[i], i.e. polys[sigma(i)][(j - r) mod n] == c - polys[i][j].
    std::vector<int> rotation;
    void fail(std::string msg);
};

// Checks that the map is a well-defined isometric involution of the glued
// surface (matches polygons, commutes with gluings, squares to identity)
// and enumerates its fixed points.  is_hyperelliptic is set when the fixed
// point count equals 2g + 2 for the genus of the surface.
InvolutionReport verify_involution(const Surface& s, const Involution& inv);

void require_involution(const Surface& s, const Involution& inv);  // throws InvolutionError

// Image of a directed edge under the involution: the edge of the partner
// polygon whose endpoints are the images of this edge's endpoints.  Edge j
// of polygon i maps to edge (j - r) mod n of polygon sigma(i), where r is
// the vertex rotation offset.
int involution_edge_image(const Surface& s, const Involution& inv,
                          const InvolutionReport& rep, int edge_id);

// Fixed points that are regular (not cone) points of the surface.  Throws
// NotHyperellipticError when the involution has the wrong fixed point count.
std::vector<FixedPoint> weierstrass_points(const Surface& s, const Involution& inv);

// Genus h of the quotient surface, from Riemann-Hurwitz with F simple
// branch points: 2 - 2g = 2(2 - 2h) - F.  Asserts the result is a
// non-negative integer.
int quotient_genus(const Surface& s, const Involution& inv);

}  // namespace hypsurf
