#pragma once

#include <vector>

#include "hypsurf/surface.hpp"

namespace hypsurf {

// Default cap on traced vertical length: 100 times the sum of the L1
// lengths of all polygon edges.  L1 keeps the bound inside the coordinate
// field; any fixed multiple works for the decompositions verified here.
QuadExt default_trace_bound(const Surface& s);

// One straight piece of a traced trajectory, inside one polygon.  `from`
// and `to` are in travel order; along_edge marks pieces that run along a
// polygon edge (seam) rather than crossing the interior.
struct PathSegment {
    int poly = 0;
    Vec2 from, to;
    bool along_edge = false;
};

enum class TraceStop {
    HitOrbit,      // reached a cone point, marked point, or boundary vertex
    LeftBoundary,  // crossed an unglued edge
    Closed,        // returned to the starting point (leaf traces only)
    Exceeded,      // traveled past the bound without any of the above
};

struct TraceResult {
    TraceStop stop = TraceStop::Exceeded;
    int orbit = -1;  // set for HitOrbit
    QuadExt length;  // total vertical distance traveled
    std::vector<PathSegment> path;
};

// Upward separatrix germ at a vertex orbit: either entering the interior of
// the corner's sector, or running along an edge.  `reversed` marks germs
// that travel an unglued downward edge against its direction.
struct UpRay {
    int orbit = -1;
    Corner corner;
    bool along_edge = false;
    bool reversed = false;
};

// All upward germs at one orbit.  On a closed surface their number equals
// the orbit's cone angle in 2pi units.
std::vector<UpRay> upward_rays(const Surface& s, const VertexOrbits& orbits, int orbit);

// Follows the vertical flow upward from a germ until it reaches a cone
// point, marked point, or boundary vertex (HitOrbit), crosses an unglued
// edge (LeftBoundary), or exceeds the bound.  Regular unmarked vertex
// orbits are passed through: a 2pi point has a unique upward continuation.
TraceResult trace_separatrix(const Surface& s, const UpRay& ray, const QuadExt& bound);

// Follows the vertical leaf upward from a point (interior or on an edge of
// the given polygon) and additionally detects closure: returning to the
// starting point yields Closed with the period as length.
TraceResult trace_leaf(const Surface& s, int poly, const Vec2& start, const QuadExt& bound);

struct VerticalConnection {
    int from_orbit = -1;
    int to_orbit = -1;
    QuadExt length;
    std::vector<PathSegment> path;
};

struct FlowScan {
    std::vector<VerticalConnection> connections;
    int exceeded_rays = 0;
};

// Traces every upward germ at every cone point, marked point, and boundary
// vertex.  Every vertical saddle connection starts at such a germ, so the
// scan is complete whenever no ray exceeds the bound.  Connections are
// sorted by (length, source orbit, geometry).
FlowScan find_vertical_saddle_connections(const Surface& s, const QuadExt& bound);

// Slits the surface open along every given connection: seam pieces are
// unglued, interior pieces become new boundary edges (polygons are split).
// Connections must be pairwise disjoint away from their endpoints, which
// holds for any subset of a saddle connection scan.
// poly_origin (optional out): for each result polygon, the index of the
// input polygon it came from.  opened_sides (optional out): for each
// connection, the result polygon indices on its two sides.
Surface cut_along(const Surface& s, const std::vector<VerticalConnection>& connections,
                  std::vector<int>* poly_origin = nullptr,
                  std::vector<std::pair<int, int>>* opened_sides = nullptr);

// Splits a (possibly disconnected) surface into its connected components,
// in order of their smallest polygon index.  members (optional out): for
// each piece, the input polygon index of each of its polygons.
std::vector<Surface> connected_pieces(const Surface& s,
                                      std::vector<std::vector<int>>* members = nullptr);

enum class PieceKind { Periodic, MinimalCertified, MinimalHeuristic };

struct PieceClassification {
    PieceKind kind = PieceKind::MinimalHeuristic;
    QuadExt circumference;  // Periodic: closed leaf period
    QuadExt width;          // Periodic: area / circumference
    QuadExt rotation;       // MinimalCertified: first-return rotation number
    QuadExt bound;          // MinimalHeuristic: the exhausted trace bound
};

// Outcome of checking a cross-circle certificate.  `conclusive` is false
// when the verification could not run to completion (circle does not close,
// a return leaves the surface); nothing is then known about the piece.
struct CrossCircleReport {
    bool conclusive = false;
    bool full_section = false;  // flow boxes over the circle fill the piece
    QuadExt circumference;
    QuadExt rotation;  // return shift divided by circumference, in [0,1)
    bool rotation_rational = false;
    int breakpoints = 0;
};

// Rigorous certificate check.  Traces the horizontal circle through the
// certificate point, locates every discontinuity of the vertical
// first-return map (first circle crossings of the downward separatrices
// from cone, marked, and boundary vertices), samples one return per
// interval, and requires all interval shifts to agree.  The exact area
// identity (sum of interval length times return height equals the piece
// area) holds iff the circle is a full cross-section.  A full section with
// irrational rotation forces a minimal vertical flow; with rational
// rotation the flow is periodic.  Throws CertificateError when the
// certificate is malformed or a separatrix exceeds the bound.
CrossCircleReport verify_cross_circle(const Surface& piece, const CrossCircleCertificate& cert,
                                      const QuadExt& bound);

// Classifies one decomposition piece: certificate first, then a direct
// cylinder check (no interior singular or marked points and one closed
// interior leaf), otherwise minimal-by-exhaustion at the given bound.
PieceClassification classify_piece(const Surface& piece, const QuadExt& bound);

struct DecomposeResult {
    std::vector<Surface> pieces;
    std::vector<PieceClassification> kinds;
    int periodic_count = 0;
    int minimal_count = 0;
    std::vector<VerticalConnection> connections;
    int exceeded_rays = 0;
};

// Cuts a closed surface along all vertical saddle connections between cone
// or marked points and classifies the resulting invariant pieces.
DecomposeResult decompose_vertical(const Surface& s);
DecomposeResult decompose_vertical(const Surface& s, const QuadExt& bound);

}  // namespace hypsurf
