#pragma once

#include <vector>

#include "hypsurf/diagram.hpp"
#include "hypsurf/flow.hpp"
#include "hypsurf/involution.hpp"
#include "hypsurf/surface.hpp"

namespace hypsurf {

// One slit of the original surface: a pair of vertical saddle connections
// swapped by the involution whose two sides lie in distinct pieces.
struct SlitPair {
    int piece_a = -1, piece_b = -1;
    int connection_a = -1, connection_b = -1;  // indices into the decomposition's connections
};

// The surface taken apart at its invariant components: each piece is cut
// out along the vertical saddle connections and healed into a closed
// surface by gluing involution-paired boundary edges.  Augmented orbits
// are the healed-piece vertex orbits lying over cone or marked points of
// the original surface; those of angle 2pi are re-marked on the piece.
struct Dissection {
    std::vector<Surface> pieces;
    std::vector<Involution> involutions;             // restriction of the involution per piece
    std::vector<std::vector<int>> augmented_orbits;  // per piece, orbit ids
    std::vector<SlitPair> slit_pairs;
};

// Takes a decomposed hyperelliptic surface apart into healed pieces.
// Throws InvolutionError when a piece boundary edge has no involution
// partner inside its piece, when the connection set is not involution
// invariant, or when the slit count is not pieces-1 (each would be a
// counterexample to the structure this relies on); NotHyperellipticError
// when the involution is not hyperelliptic.
Dissection dissect(const Surface& s, const Involution& inv, const DecomposeResult& dec);

// Reads the invariant component diagram off a decomposed surface: one
// vertex per piece (kind from the classification), one solid half-edge per
// vertical augmented saddle connection of the healed piece, one dotted
// half-edge per wandering separatrix pair, and one full edge per slit.
Diagram extract_diagram(const Surface& s, const Involution& inv, const DecomposeResult& dec);

}  // namespace hypsurf
