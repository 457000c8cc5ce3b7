#pragma once

#include <string>
#include <vector>

#include "hypsurf/blocks.hpp"
#include "hypsurf/diagram.hpp"
#include "hypsurf/involution.hpp"
#include "hypsurf/surface.hpp"

namespace hypsurf {

struct VertexBlock {
    BlockFamily family = BlockFamily::P;
    int n = 0;
};

// A diagram realized as a closed surface: one block per vertex, translated
// to disjoint plumes, with one Weierstrass edge per full-edge endpoint slit
// open and the slits cross-glued by translation.
struct Realization {
    Surface net;
    Involution involution;
    std::vector<int> provenance;             // polygon index -> diagram vertex id
    std::vector<VertexBlock> vertex_blocks;  // aligned with dg.vertices
};

// Builds the surface for a diagram.  Vertices of degree n with all
// half-edges solid become P_n, those with exactly one dotted half-edge
// become M_n (sheared by alpha).  Weierstrass edges are consumed in
// ascending catalog order, full edges in listed order.  2pi vertex orbits
// of the result are marked (every block corner lies over an augmented
// point).  Throws DiagramError for vertices with two or more dotted
// half-edges, a dotted half-edge on a periodic vertex, or a degree-1
// minimal vertex (that block is undefined); BlockError for a rational
// alpha.
Realization realize_diagram(const Diagram& dg, const QuadExt& alpha);

struct RealizationReport {
    bool ok = true;
    std::vector<std::string> errors;
    bool torus = false;        // predicted: no cone points
    std::vector<int> stratum;  // actual cone orders, descending
    int genus = 0;
    int fixed_points = 0;
    int periodic = 0;
    int minimal = 0;
    int uncertified_minimal = 0;
    bool diagram_isomorphic = false;

    void fail(std::string msg) {
        ok = false;
        errors.push_back(std::move(msg));
    }
};

// Independent end-to-end check of a realized surface: recomputed stratum
// and genus against the diagram's half-edge count, involution fixed points
// = 2 genus + 2, vertical decomposition counts against the expected
// (periodic, minimal) pair with every minimal piece certified, and the
// extracted diagram isomorphic to the input.
RealizationReport verify_realization(const Diagram& dg, const Surface& s, const Involution& inv,
                                     int expected_p, int expected_m);

}  // namespace hypsurf
