#include "hypsurf/verifier.hpp"

#include <algorithm>
#include <string>

#include "hypsurf/errors.hpp"

namespace hypsurf {

std::vector<std::pair<int, int>> enumerate_pairs(int g, StratumKind kind) {
    if (g < 1) throw DomainError("genus must be at least 1");
    std::vector<std::pair<int, int>> out;
    for (int m = 0; m <= 2 * g + 2; ++m) {
        for (int p = 0; p <= 2 * g + 2; ++p) {
            if (p + m < 1) continue;
            if (feasible_pair(g, kind, p, m)) out.emplace_back(p, m);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
    return out;
}

std::pair<Surface, Involution> minimal_torus_witness(const QuadExt& alpha) {
    if (alpha.is_rational()) throw BlockError("twist parameter must be irrational");
    QuadExt one(1), zero(0);
    Surface s;
    s.field_d = alpha.d();
    s.polys = {{Vec2{zero, zero}, Vec2{one, zero}, Vec2{one + alpha, one}, Vec2{alpha, one}}};
    s.glue = {2, 3, 0, 1};
    s.marks = {Corner{0, 0}};
    QuadExt half(Rat(1, 2));
    s.certificates = {CrossCircleCertificate{0, Vec2{(one + alpha) * half, half}}};
    require_valid(s);

    Involution inv;
    inv.poly_map = {0};
    inv.centers = {Vec2{one + alpha, one}};
    require_involution(s, inv);
    return {s, inv};
}

namespace {

WitnessEvidence run_witness(WitnessBuilder builder, Diagram dg, const QuadExt& alpha, int p, int m) {
    WitnessEvidence w;
    w.builder = builder;
    w.diagram = std::move(dg);
    try {
        if (builder == WitnessBuilder::Handcrafted) {
            auto [s, inv] = minimal_torus_witness(alpha);
            w.surface = std::move(s);
            w.involution = std::move(inv);
        } else {
            Realization r = realize_diagram(w.diagram, alpha);
            w.surface = std::move(r.net);
            w.involution = std::move(r.involution);
        }
        w.report = verify_realization(w.diagram, w.surface, w.involution, p, m);
    } catch (const Error& e) {
        w.report.fail(std::string("witness construction failed: ") + e.what());
    }
    return w;
}

}  // namespace

EvidenceReport verify_theorem(int g, StratumKind kind, const QuadExt& alpha) {
    if (g < 1) throw DomainError("genus must be at least 1");
    EvidenceReport rep;
    rep.genus = g;
    rep.kind = kind;
    rep.budget = kind == StratumKind::SingleZero ? 2 * g - 1 : 2 * g;
    if (g >= 2) rep.minimal_bound = kind == StratumKind::SingleZero ? g - 1 : g;

    bool all_ok = true;
    for (auto [p, m] : enumerate_pairs(g, kind)) {
        PairEvidence pe;
        pe.p = p;
        pe.m = m;
        if (rep.minimal_bound >= 0 && m > rep.minimal_bound) rep.minimal_bound_ok = false;
        if (p >= 1) {
            pe.witnesses.push_back(
                run_witness(WitnessBuilder::PCentral, build_p_central(rep.budget, p, m), alpha, p, m));
        }
        if (m >= 1) {
            Diagram dg = build_m_central(rep.budget, p, m);
            // the one diagram whose central block would be M_1
            bool handcraft = kind == StratumKind::SingleZero && g == 1 && p == 0 && m == 1;
            pe.witnesses.push_back(run_witness(
                handcraft ? WitnessBuilder::Handcrafted : WitnessBuilder::MCentral, std::move(dg),
                alpha, p, m));
        }
        pe.ok = !pe.witnesses.empty();
        for (const auto& w : pe.witnesses) pe.ok = pe.ok && w.report.ok;
        all_ok = all_ok && pe.ok;
        rep.pairs.push_back(std::move(pe));
    }

    for (int m = 0; m <= 2 * g; ++m) {
        for (int p = 0; p + m <= 2 * g; ++p) {
            if (p + m < 1 || feasible_pair(g, kind, p, m)) continue;
            InfeasibleEvidence ev;
            ev.p = p;
            ev.m = m;
            ev.min_required = min_half_edges(p, m);
            ev.budget = rep.budget;
            ev.by_bound = ev.min_required > ev.budget;
            // genus 1, double zero: the torus carries a single component, so
            // only (1, 0) and (0, 1) are admissible even inside the budget
            ev.by_torus_rule = !ev.by_bound && g == 1;
            if (!ev.by_bound && !ev.by_torus_rule) all_ok = false;
            rep.infeasible.push_back(ev);
        }
    }

    rep.ok = all_ok && rep.minimal_bound_ok;
    return rep;
}

EvidenceReport verify_theorem(int g, StratumKind kind) {
    return verify_theorem(g, kind, QuadExt(Rat(0), Rat(1), BigInt(2)));
}

}  // namespace hypsurf
