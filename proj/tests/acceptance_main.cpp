// Acceptance gate: one timed pass/fail line per criterion, nonzero exit on
// any failure.  Criteria are checked in order and independently; a failure
// reports its first few reasons but does not stop the remaining criteria.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hypsurf/assembler.hpp"
#include "hypsurf/blocks.hpp"
#include "hypsurf/diagram.hpp"
#include "hypsurf/dissect.hpp"
#include "hypsurf/flow.hpp"
#include "hypsurf/involution.hpp"
#include "hypsurf/json_io.hpp"
#include "hypsurf/svg.hpp"
#include "hypsurf/verifier.hpp"
#include "support/oracles.hpp"

using namespace hypsurf;

namespace {

const QuadExt kSqrt2{Rat(0), Rat(1), 2};

struct Failures {
    std::vector<std::string> messages;

    void expect(bool ok, const std::string& msg) {
        if (!ok && messages.size() < 8) messages.push_back(msg);
        if (!ok && messages.size() == 8) messages.push_back("(more failures suppressed)");
    }
    bool ok() const { return messages.empty(); }
};

// evidence shared between criteria 4, 6, and 7
std::vector<EvidenceReport> g_evidence;

void criterion_seam_classes(Failures& f) {
    std::mt19937 rng(53091);
    for (int n = 1; n <= 50; ++n) {
        std::vector<std::vector<Rat>> sets;
        std::vector<Rat> spaced;
        for (int i = 0; i < n; ++i) spaced.emplace_back(i, n);
        sets.push_back(spaced);
        for (int t = 0; t < 100; ++t) sets.push_back(oracles::random_circle_points(rng, n));

        for (const auto& pts : sets) {
            auto classes = lemma_technical_classes(pts);
            if (n % 2 == 1) {
                f.expect(classes.size() == 1, "n=" + std::to_string(n) + ": expected one class");
            } else {
                bool shape = classes.size() == 2 && classes[0].size() == static_cast<size_t>(n) &&
                             classes[1].size() == static_cast<size_t>(n);
                f.expect(shape, "n=" + std::to_string(n) + ": expected two classes of n preimages");
            }
            f.expect(classes == oracles::seam_classes_brute(pts),
                     "n=" + std::to_string(n) + ": class structure disagrees with the oracle");
        }
    }
}

void criterion_block_table(Failures& f) {
    auto check_block = [&](const Block& b, int n, size_t seams, const std::string& tag) {
        int g = n % 2 == 1 ? (n + 1) / 2 : n / 2;
        f.expect(genus(b.surface) == g, tag + ": genus");
        std::vector<int> want;
        if (n >= 3 && n % 2 == 1) want = {n - 1};
        if (n >= 4 && n % 2 == 0) want = {n / 2 - 1, n / 2 - 1};
        f.expect(stratum_signature(b.surface) == want, tag + ": stratum");
        f.expect(total_cone_angle(b.surface) == n, tag + ": total cone angle");
        f.expect(b.weierstrass_edges.size() == seams, tag + ": seam count");
        f.expect(block_weierstrass_edges(b) == b.weierstrass_edges, tag + ": seam catalog");
        auto rep = verify_involution(b.surface, b.involution);
        f.expect(rep.ok && rep.is_hyperelliptic, tag + ": involution");
        f.expect(rep.fixed_points.size() == static_cast<size_t>(2 * g + 2), tag + ": fixed points");
    };
    for (int n = 1; n <= 12; ++n)
        check_block(construct_P(n), n, n, "P_" + std::to_string(n));
    for (int n = 2; n <= 12; ++n)
        check_block(construct_M(n, kSqrt2), n, n - 1, "M_" + std::to_string(n));
}

void criterion_flow_classification(Failures& f) {
    for (int n = 1; n <= 12; ++n) {
        auto dec = decompose_vertical(construct_P(n).surface);
        std::string tag = "P_" + std::to_string(n);
        f.expect(dec.periodic_count == 1 && dec.minimal_count == 0, tag + ": expected (1,0)");
        f.expect(dec.exceeded_rays == 0, tag + ": scan exceeded");
        for (const auto& k : dec.kinds)
            f.expect(k.kind == PieceKind::Periodic, tag + ": piece not certified periodic");
    }
    for (int n = 2; n <= 12; ++n) {
        auto dec = decompose_vertical(construct_M(n, kSqrt2).surface);
        std::string tag = "M_" + std::to_string(n);
        f.expect(dec.periodic_count == 0 && dec.minimal_count == 1, tag + ": expected (0,1)");
        for (const auto& k : dec.kinds)
            f.expect(k.kind == PieceKind::MinimalCertified, tag + ": piece not certified minimal");
    }
}

void criterion_witnesses(Failures& f) {
    g_evidence.clear();
    for (int g = 2; g <= 6; ++g) {
        for (auto kind : {StratumKind::SingleZero, StratumKind::DoubleZero}) {
            auto rep = verify_theorem(g, kind, kSqrt2);
            std::string tag = "g=" + std::to_string(g) +
                              (kind == StratumKind::SingleZero ? " single" : " double");
            auto pairs = enumerate_pairs(g, kind);
            f.expect(rep.pairs.size() == pairs.size(), tag + ": pair coverage");
            for (const auto& pe : rep.pairs) {
                std::string ptag = tag + " (" + std::to_string(pe.p) + "," + std::to_string(pe.m) + ")";
                f.expect(pe.ok && !pe.witnesses.empty(), ptag + ": no verified witness");
                for (const auto& w : pe.witnesses)
                    f.expect(w.report.ok, ptag + ": " + (w.report.errors.empty()
                                                             ? std::string("witness failed")
                                                             : w.report.errors.front()));
            }
            g_evidence.push_back(std::move(rep));
        }
    }
}

void criterion_bound_side(Failures& f) {
    for (int g = 2; g <= 6; ++g) {
        for (auto kind : {StratumKind::SingleZero, StratumKind::DoubleZero}) {
            int budget = kind == StratumKind::SingleZero ? 2 * g - 1 : 2 * g;
            for (int m = 0; m <= 2 * g; ++m) {
                for (int p = 0; p + m <= 2 * g; ++p) {
                    if (p + m < 1 || feasible_pair(g, kind, p, m)) continue;
                    f.expect(min_half_edges(p, m) > budget,
                             "g=" + std::to_string(g) + " (" + std::to_string(p) + "," +
                                 std::to_string(m) + "): infeasible but within budget");
                }
            }
        }
    }
    f.expect(!feasible_pair(1, StratumKind::DoubleZero, 2, 0),
             "genus-1 exception: (2,0) must be rejected in the double-zero stratum");
    f.expect(feasible_pair(1, StratumKind::DoubleZero, 1, 0) &&
                 feasible_pair(1, StratumKind::DoubleZero, 0, 1),
             "genus-1 torus pairs (1,0) and (0,1) must stay feasible");
}

void invariant_suite(const Diagram& dg, const Surface& s, const Involution& inv, Failures& f,
                     const std::string& tag) {
    // cone angle against the diagram degrees
    auto drep = validate_diagram(dg);
    f.expect(drep.ok, tag + ": diagram invalid");
    int degree_sum = 0;
    for (int d : drep.degrees) degree_sum += d;
    f.expect(total_cone_angle(s) == degree_sum, tag + ": cone angle != degree sum");

    auto dec = decompose_vertical(s);

    // boundary edges between piece pairs come in even numbers
    std::vector<int> poly_origin;
    std::vector<std::pair<int, int>> opened;
    Surface cut = cut_along(s, dec.connections, &poly_origin, &opened);
    std::vector<std::vector<int>> members;
    auto pieces = connected_pieces(cut, &members);
    f.expect(pieces.size() == dec.pieces.size(), tag + ": piece count mismatch");
    std::vector<int> piece_of(cut.poly_count(), -1);
    for (size_t i = 0; i < members.size(); ++i)
        for (int q : members[i]) piece_of[q] = static_cast<int>(i);
    std::map<std::pair<int, int>, int> between;
    for (const auto& sides : opened) {
        int a = piece_of[sides.first], b = piece_of[sides.second];
        if (a != b) ++between[{std::min(a, b), std::max(a, b)}];
    }
    for (const auto& [pr, cnt] : between)
        f.expect(cnt % 2 == 0, tag + ": odd boundary-edge count between pieces");

    // dissection: involution-respecting, valid closed pieces, a tree, genus-0 quotients
    try {
        auto dis = dissect(s, inv, dec);
        f.expect(dis.slit_pairs.size() == dis.pieces.size() - 1, tag + ": slits do not form a tree");
        for (const auto& sp : dis.slit_pairs)
            f.expect(sp.piece_a != sp.piece_b, tag + ": slit joins a piece to itself");
        for (size_t i = 0; i < dis.pieces.size(); ++i) {
            const auto& piece = dis.pieces[i];
            f.expect(validate_surface(piece).ok && is_closed(piece),
                     tag + ": healed piece invalid");
            f.expect(verify_involution(piece, dis.involutions[i]).ok,
                     tag + ": piece involution broken");
            f.expect(quotient_genus(piece, dis.involutions[i]) == 0,
                     tag + ": piece quotient genus nonzero");
        }
    } catch (const std::exception& e) {
        f.expect(false, tag + ": dissection threw: " + std::string(e.what()));
    }

    // surfaces without wandering separatrices are unions of cylinders
    if (minimal_vertex_count(dg) == 0) {
        f.expect(dec.minimal_count == 0 && dec.exceeded_rays == 0,
                 tag + ": all-cylinder assembly left the periodic regime");
        for (const auto& k : dec.kinds)
            f.expect(k.kind == PieceKind::Periodic, tag + ": non-cylinder piece");
    }
}

void criterion_invariant_suite(Failures& f) {
    int covered = 0;
    for (const auto& ev : g_evidence) {
        if (ev.genus > 3) continue;  // genus 2 and 3 give every shape within the time budget
        for (const auto& pe : ev.pairs) {
            for (const auto& w : pe.witnesses) {
                if (w.builder == WitnessBuilder::Handcrafted) continue;
                std::string tag = "g=" + std::to_string(ev.genus) + " (" + std::to_string(pe.p) +
                                  "," + std::to_string(pe.m) + ")";
                invariant_suite(w.diagram, w.surface, w.involution, f, tag);
                ++covered;
            }
        }
    }
    f.expect(covered >= 20, "invariant suite corpus unexpectedly small");
}

void criterion_minimal_bound(Failures& f) {
    f.expect(g_evidence.size() == 10, "expected evidence for g=2..6 in both strata");
    for (const auto& ev : g_evidence) {
        int bound = ev.kind == StratumKind::SingleZero ? ev.genus - 1 : ev.genus;
        f.expect(ev.minimal_bound == bound, "stated bound mismatch at g=" + std::to_string(ev.genus));
        f.expect(ev.minimal_bound_ok, "bound violated at g=" + std::to_string(ev.genus));
        for (const auto& pe : ev.pairs)
            f.expect(pe.m <= bound, "witness pair exceeds the minimal-component bound");
    }
}

void criterion_serialization(Failures& f) {
    std::vector<Surface> corpus;
    std::vector<Involution> involutions;
    for (int n = 1; n <= 12; ++n) {
        auto b = construct_P(n);
        corpus.push_back(b.surface);
        involutions.push_back(b.involution);
    }
    for (int n = 2; n <= 12; ++n) {
        auto b = construct_M(n, kSqrt2);
        corpus.push_back(b.surface);
        involutions.push_back(b.involution);
    }
    std::vector<Diagram> diagrams;
    for (const auto& ev : g_evidence) {
        if (ev.genus > 3) continue;
        for (const auto& pe : ev.pairs)
            for (const auto& w : pe.witnesses) {
                corpus.push_back(w.surface);
                involutions.push_back(w.involution);
                diagrams.push_back(w.diagram);
            }
    }

    for (size_t i = 0; i < corpus.size(); ++i) {
        auto j = surface_to_json(corpus[i]);
        f.expect(surface_to_json(surface_from_json(j)).dump() == j.dump(),
                 "surface round-trip changed " + std::to_string(i));
        auto ji = involution_to_json(involutions[i]);
        f.expect(involution_to_json(involution_from_json(ji)).dump() == ji.dump(),
                 "involution round-trip changed " + std::to_string(i));
        f.expect(render_surface_svg(corpus[i], &involutions[i]) ==
                     render_surface_svg(corpus[i], &involutions[i]),
                 "surface render not deterministic " + std::to_string(i));
    }
    for (size_t i = 0; i < diagrams.size(); ++i) {
        auto j = diagram_to_json(diagrams[i]);
        f.expect(diagram_to_json(diagram_from_json(j)).dump() == j.dump(),
                 "diagram round-trip changed " + std::to_string(i));
        f.expect(render_diagram_svg(diagrams[i]) == render_diagram_svg(diagrams[i]),
                 "diagram render not deterministic " + std::to_string(i));
    }
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void(Failures&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "seam class parity", 5.0, criterion_seam_classes},
        {2, "block table", 10.0, criterion_block_table},
        {3, "flow classification of blocks", 30.0, criterion_flow_classification},
        {4, "component-pair witnesses", 300.0, criterion_witnesses},
        {5, "infeasible pairs exceed the budget", 1.0, criterion_bound_side},
        {6, "assembly invariant suite", 60.0, criterion_invariant_suite},
        {7, "minimal-component bound", 300.0, criterion_minimal_bound},
        {8, "serialization and rendering determinism", 5.0, criterion_serialization},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        Failures f;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(f);
        } catch (const std::exception& e) {
            f.expect(false, std::string("unhandled exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds)
            f.expect(false, "exceeded the time budget of " + std::to_string(c.budget_seconds) + "s");
        std::printf("[%s] criterion %d (%s) (%.2fs)\n", f.ok() ? "PASS" : "FAIL", c.id, c.title, secs);
        for (const auto& msg : f.messages) std::printf("    - %s\n", msg.c_str());
        if (!f.ok()) all_ok = false;
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
