#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hypsurf {

enum class VertexKind { Periodic, Minimal };
enum class HalfEdgeStyle { Solid, Dotted };

struct DiagramVertex {
    int id = 0;
    VertexKind kind = VertexKind::Periodic;
};

struct DiagramHalfEdge {
    int vertex = 0;  // vertex id
    HalfEdgeStyle style = HalfEdgeStyle::Solid;
};

// Component diagram: a tree of vertices (one per invariant component of the
// vertical flow), half-edges standing for vertical saddle connections
// (solid) or wandering separatrices (dotted), and full edges pairing the
// two solid half-edges created by one slit between components.
struct Diagram {
    std::vector<DiagramVertex> vertices;
    std::vector<DiagramHalfEdge> half_edges;
    std::vector<std::pair<int, int>> full_edges;  // indices into half_edges

    int half_edge_count() const { return static_cast<int>(half_edges.size()); }
};

struct DiagramReport {
    bool ok = true;
    std::vector<std::string> errors;
    std::vector<int> degrees;  // per vertex: incident half-edges (full edges once per endpoint)

    void fail(std::string msg) {
        ok = false;
        errors.push_back(std::move(msg));
    }
};

// Checks: unique vertex ids, references in range, full edges pairing
// distinct solid half-edges on distinct vertices with no half-edge reused,
// every minimal vertex carrying at least one dotted half-edge, and the
// full edges forming a spanning tree.
DiagramReport validate_diagram(const Diagram& dg);

// Throws DiagramError if validate_diagram reports a problem.
void require_diagram(const Diagram& dg);

// Least possible number of half-edges on a diagram with p periodic and m
// minimal vertices: m dotted plus 2(m+p-1) from the spanning tree.
int min_half_edges(int p, int m);

enum class StratumKind { SingleZero, DoubleZero };

// Whether a surface of the given genus whose vertical flow lies in the
// hyperelliptic stratum of the given kind can have p periodic and m minimal
// invariant components.  Budget: 2g-1 half-edges for one zero of order
// 2g-2, 2g for two zeros of order g-1; a genus-1 double-zero surface is a
// torus with two marked points and decomposes as a single component.
bool feasible_pair(int g, StratumKind kind, int p, int m);

// Star-shaped builders realizing any feasible (p, m) with k half-edges.
// Both make a central vertex joined by full edges to the m+p-1 others and
// put y = k - (3m+2p-2) spare solid half-edges on the center.
Diagram build_p_central(int k, int p, int m);  // center periodic; needs p >= 1
Diagram build_m_central(int k, int p, int m);  // center minimal, gets a dotted; needs m >= 1

struct StratumPrediction {
    bool torus = false;      // k <= 2: no cone points at all
    std::vector<int> orders;  // otherwise the cone point orders
};

// Stratum forced by the half-edge count k of a diagram extracted from a
// hyperelliptic surface: one zero of order k-1 for odd k, two of order
// k/2-1 for even k >= 4, and a torus for k <= 2.
StratumPrediction predicted_stratum(const Diagram& dg);

// Genus forced by the half-edge count: (k+1)/2 for odd k, k/2 for even
// k >= 4, and 1 for k <= 2.
int predicted_genus(const Diagram& dg);

int periodic_vertex_count(const Diagram& dg);
int minimal_vertex_count(const Diagram& dg);

// Per-vertex-id counts of solid half-edges not used by a full edge, and of
// dotted half-edges.
int free_solid_count(const Diagram& dg, int vertex_id);
int dotted_count(const Diagram& dg, int vertex_id);

// Canonical encoding of the diagram as an unrooted tree whose vertices are
// labeled by (kind, free solid count, dotted count); equal encodings
// characterize isomorphism.  Requires a valid diagram.
std::string canonical_form(const Diagram& dg);

bool isomorphic(const Diagram& a, const Diagram& b);

}  // namespace hypsurf
