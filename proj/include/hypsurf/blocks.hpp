#pragma once

#include <vector>

#include "hypsurf/involution.hpp"
#include "hypsurf/surface.hpp"

namespace hypsurf {

// Identification classes of 2n circle points under the seam relations.
// `points` are positions on a circle of circumference 1 (normalized into
// [0,1)); duplicates throw DomainError.  With the sorted positions
// x_0 < ... < x_{n-1} and mirror positions y_i = -x_i mod 1 on a second
// circle, the classes are generated by x_i ~ y_{i+1} and x_{i+1} ~ y_i
// (indices mod n).  Returned classes list indices 0..n-1 for the x_i and
// n..2n-1 for the y_i, each class sorted, classes ordered by first element.
std::vector<std::vector<int>> lemma_technical_classes(const std::vector<Rat>& points);

enum class BlockFamily { P, M };

// A building block: a hyperelliptic translation surface together with its
// involution and the ordered catalog of slittable seam edges.  Catalog
// entries are the upward (0,1)-directed edge of each seam pair; the partner
// is glue[id].  Each seam pair is swapped by the involution, so its shared
// midpoint is a regular fixed point available for slit constructions.
struct Block {
    BlockFamily family;
    int n = 0;
    QuadExt alpha;  // twist parameter, M family only
    Surface surface;
    Involution involution;
    std::vector<int> weierstrass_edges;
};

// Cylinder block on n unit squares stacked into the rectangle [0,1] x [0,n]:
// bottom glued to top, right seam strip i glued to the left strip at the
// mirrored height.  Vertical flow is one cylinder of circumference n.
// Genus (n+1)/2 for odd n, n/2 for even n; all 2pi vertex classes marked.
Block construct_P(int n);

// Twisted block: the P_n net is sheared vertically by n-1, cut along the
// two horizontal chords at heights n-1 and n, and the middle unit square is
// sheared horizontally by alpha.  For irrational alpha the vertical flow is
// minimal away from the seams.  Requires n >= 2; rejects rational alpha
// unless require_irrational is false (that variant is useful as a negative
// control, its vertical flow is periodic).  Throws BlockError.
Block construct_M(int n, const QuadExt& alpha, bool require_irrational = true);

// Re-derives the catalog from the surface and involution (each entry must
// be an upward unit edge whose gluing partner is also its involution image)
// and returns it.  Throws BlockError if the stored catalog is inconsistent.
std::vector<int> block_weierstrass_edges(const Block& b);

}  // namespace hypsurf
