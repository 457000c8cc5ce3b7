#pragma once

#include <utility>
#include <vector>

#include "hypsurf/assembler.hpp"
#include "hypsurf/diagram.hpp"

namespace hypsurf {

// All component-count pairs (p, m) admissible for the stratum kind in genus
// g, sorted by (m, p).
std::vector<std::pair<int, int>> enumerate_pairs(int g, StratumKind kind);

enum class WitnessBuilder { PCentral, MCentral, Handcrafted };

struct WitnessEvidence {
    WitnessBuilder builder = WitnessBuilder::PCentral;
    Diagram diagram;
    Surface surface;
    Involution involution;
    RealizationReport report;
};

struct PairEvidence {
    int p = 0;
    int m = 0;
    bool ok = false;
    std::vector<WitnessEvidence> witnesses;
};

struct InfeasibleEvidence {
    int p = 0;
    int m = 0;
    int min_required = 0;  // fewest half-edges any diagram with p, m can have
    int budget = 0;        // half-edges forced by the stratum kind and genus
    bool by_bound = false;      // min_required exceeds the budget
    bool by_torus_rule = false; // genus-1 rejection: a flat torus is one component
};

struct EvidenceReport {
    int genus = 1;
    StratumKind kind = StratumKind::SingleZero;
    int budget = 0;
    int minimal_bound = -1;  // -1 when the general-stratum bound is not asserted
    bool minimal_bound_ok = true;
    std::vector<PairEvidence> pairs;
    std::vector<InfeasibleEvidence> infeasible;
    bool ok = false;
};

// Flat torus with one marked point and an irrational horizontal twist: the
// vertical flow is minimal, giving the (p, m) = (0, 1) single-zero witness
// in genus 1, where no block diagram realizes a degree-1 minimal vertex.
// Includes a cross-circle certificate and the center involution.
std::pair<Surface, Involution> minimal_torus_witness(const QuadExt& alpha);

// Realizes and verifies a witness for every admissible pair (both diagram
// families whenever both apply; each must pass) and records bound-side
// evidence for every inadmissible pair with p + m <= 2g.  For g >= 2 the
// largest admissible m is asserted against the stratum-wide tight bound
// (g - 1 for a single zero, g for a double zero).
EvidenceReport verify_theorem(int g, StratumKind kind, const QuadExt& alpha);
EvidenceReport verify_theorem(int g, StratumKind kind);

}  // namespace hypsurf
