#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "hypsurf/geom.hpp"

namespace hypsurf {

// A polygon corner: vertex `vertex` of polygon `poly`.  The outgoing edge of
// the corner is edge `vertex`, the incoming edge is `vertex - 1` (mod size).
struct Corner {
    int poly = 0;
    int vertex = 0;
    friend auto operator<=>(const Corner&, const Corner&) = default;
};

// Seed for an exact minimality check: `point` lies on a closed horizontal
// circle inside polygon `poly`; the verifier reconstructs the circle and its
// vertical first-return map from this alone.
struct CrossCircleCertificate {
    int poly = 0;
    Vec2 point;
};

// Translation surface as a net of CCW polygons with translation gluings.
// Directed edges are numbered globally: polygon 0's edges first, then
// polygon 1's, etc.  glue[e] is the partner edge carrying the same segment
// with opposite direction vector, or BOUNDARY for an unglued (cut) edge.
struct Surface {
    static constexpr int BOUNDARY = -1;

    BigInt field_d = 2;
    std::vector<std::vector<Vec2>> polys;
    std::vector<int> glue;
    std::vector<Corner> marks;  // one representative corner per marked orbit
    std::vector<CrossCircleCertificate> certificates;

    int poly_count() const { return static_cast<int>(polys.size()); }
    int poly_size(int p) const { return static_cast<int>(polys[p].size()); }
    int edge_count() const { return static_cast<int>(glue.size()); }

    int edge_base(int poly) const;
    int edge_id(int poly, int edge) const { return edge_base(poly) + edge; }
    std::pair<int, int> edge_of(int id) const;  // (poly, local edge)

    const Vec2& edge_tail(int poly, int edge) const { return polys[poly][edge]; }
    const Vec2& edge_head(int poly, int edge) const {
        return polys[poly][(edge + 1) % polys[poly].size()];
    }
    Vec2 edge_vec(int poly, int edge) const { return edge_head(poly, edge) - edge_tail(poly, edge); }

    bool is_glued(int id) const { return glue[id] != BOUNDARY; }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> errors;

    void fail(std::string msg) {
        ok = false;
        errors.push_back(std::move(msg));
    }
};

// Checks polygon sanity (CCW, simple, no zero-length edges or backtracking
// spikes), gluing involutivity and translation compatibility, field
// consistency, connectivity, and mark placement.  Straight-angle corners are
// allowed: they realize marked points on otherwise straight boundary.
ValidationReport validate_surface(const Surface& s);
void require_valid(const Surface& s);  // throws GeometryError on first defect

bool is_connected(const Surface& s);
bool is_closed(const Surface& s);

// Corners identified across gluings; each orbit is one surface point.
struct VertexOrbits {
    std::vector<std::vector<Corner>> orbits;
    std::vector<std::vector<int>> orbit_of;  // [poly][vertex] -> orbit index
    std::vector<int> angle_units;            // cone angle in full turns; -1 if on boundary
    std::vector<bool> on_boundary;           // orbit touches an unglued edge
    std::vector<bool> marked;

    int orbit_at(const Corner& c) const { return orbit_of[c.poly][c.vertex]; }
    int count() const { return static_cast<int>(orbits.size()); }
};

VertexOrbits compute_orbits(const Surface& s);

struct ConePoint {
    int orbit = 0;
    int angle_units = 0;  // cone angle / 2pi
    bool is_true_cone = false;
    bool marked = false;
    std::vector<Corner> corners;
};

// Every vertex orbit with its angle, including marked and plain 2pi orbits.
std::vector<ConePoint> cone_points(const Surface& s);

// Sum of orbit angles in units of 2pi (all orbits by default).
int total_cone_angle(const Surface& s, bool true_cones_only = false);

// Via Euler characteristic of the glued cell complex; closed surfaces only.
int genus(const Surface& s);

// Cone orders (angle/2pi - 1) over true cones, sorted descending.
std::vector<int> stratum_signature(const Surface& s);

QuadExt area(const Surface& s);

// Apply a linear map to the listed polygons (all when region is empty);
// gluings are kept and the result revalidated, so a shear that breaks a
// boundary gluing fails loudly.  Certificates survive only maps that keep
// horizontal lines horizontal.
Surface apply_shear(const Surface& s, const Mat2& matrix, const std::vector<int>& region = {});

Surface translated(const Surface& s, const Vec2& t);

// Splits edge `edge` (and its glue partner) at point p, which must lie
// strictly inside the edge.  Edge ids and corner indices shift.
void insert_edge_point(Surface& s, int edge, const Vec2& p);

// Splits polygon `poly` along the interior chord vi--vj into two polygons
// glued along the new edge pair.  Returns the index of the new polygon (the
// vj..vi side); the vi..vj side replaces `poly`.
int split_polygon_chord(Surface& s, int poly, int vi, int vj);

}  // namespace hypsurf
