#include "hypsurf/assembler.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "hypsurf/dissect.hpp"
#include "hypsurf/errors.hpp"
#include "hypsurf/flow.hpp"

namespace hypsurf {

namespace {

std::string join(const std::vector<int>& xs) {
    std::ostringstream os;
    for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    return os.str();
}

}  // namespace

Realization realize_diagram(const Diagram& dg, const QuadExt& alpha) {
    require_diagram(dg);
    if (alpha.is_rational()) throw BlockError("twist parameter must be irrational");

    int nv = static_cast<int>(dg.vertices.size());
    std::map<int, int> vidx;
    for (int i = 0; i < nv; ++i) vidx[dg.vertices[i].id] = i;

    std::vector<int> degree(nv, 0), dots(nv, 0);
    for (const auto& he : dg.half_edges) {
        int i = vidx.at(he.vertex);
        ++degree[i];
        if (he.style == HalfEdgeStyle::Dotted) ++dots[i];
    }

    Realization out;
    std::vector<Block> blocks;
    blocks.reserve(nv);
    for (int i = 0; i < nv; ++i) {
        if (dots[i] > 1) {
            throw DiagramError("vertex " + std::to_string(dg.vertices[i].id) +
                               " has two or more dotted half-edges and no block realization");
        }
        if (dg.vertices[i].kind == VertexKind::Periodic) {
            if (dots[i] > 0) {
                throw DiagramError("dotted half-edge on periodic vertex " +
                                   std::to_string(dg.vertices[i].id));
            }
            blocks.push_back(construct_P(degree[i]));
        } else {
            if (degree[i] == 1) {
                throw DiagramError("degree-1 minimal vertex " + std::to_string(dg.vertices[i].id) +
                                   " has no block realization");
            }
            blocks.push_back(construct_M(degree[i], alpha));
        }
        out.vertex_blocks.push_back({blocks[i].family, blocks[i].n});
    }

    // Side-by-side placement with unit gaps; every involution center moves
    // by twice the translation.
    QuadExt cursor = 0;
    for (auto& b : blocks) {
        QuadExt lo = b.surface.polys[0][0].x, hi = lo;
        for (const auto& poly : b.surface.polys) {
            for (const auto& v : poly) {
                if (v.x < lo) lo = v.x;
                if (v.x > hi) hi = v.x;
            }
        }
        Vec2 t{cursor - lo, QuadExt(0)};
        b.surface = translated(b.surface, t);
        for (auto& c : b.involution.centers) c = c + t + t;
        cursor = cursor + (hi - lo) + 1;
    }

    Surface net;
    net.field_d = alpha.d();
    Involution inv;
    std::vector<int> poly_base(nv, 0), edge_off(nv, 0);
    for (int i = 0; i < nv; ++i) {
        const Surface& bs = blocks[i].surface;
        poly_base[i] = net.poly_count();
        edge_off[i] = net.edge_count();
        for (const auto& poly : bs.polys) {
            net.polys.push_back(poly);
            out.provenance.push_back(dg.vertices[i].id);
        }
        for (int g : bs.glue) net.glue.push_back(g == Surface::BOUNDARY ? g : g + edge_off[i]);
        for (const auto& cert : bs.certificates) {
            net.certificates.push_back({cert.poly + poly_base[i], cert.point});
        }
        for (int pm : blocks[i].involution.poly_map) inv.poly_map.push_back(pm + poly_base[i]);
        inv.centers.insert(inv.centers.end(), blocks[i].involution.centers.begin(),
                           blocks[i].involution.centers.end());
    }

    // One slit per full edge: open one seam pair in each endpoint block and
    // reglue across.  Upward edges keep upward partners, so both new pairs
    // are translation gluings and the involution still swaps them.
    std::vector<size_t> next_w(nv, 0);
    auto take_seam = [&](int i) {
        const auto& cat = blocks[i].weierstrass_edges;
        if (next_w[i] >= cat.size()) {
            throw DiagramError("vertex " + std::to_string(dg.vertices[i].id) +
                               " needs more slits than its block has seams");
        }
        int e = cat[next_w[i]++] + edge_off[i];
        return std::pair<int, int>{e, net.glue[e]};
    };
    for (const auto& fe : dg.full_edges) {
        int u = vidx.at(dg.half_edges[fe.first].vertex);
        int v = vidx.at(dg.half_edges[fe.second].vertex);
        auto [eu, fu] = take_seam(u);
        auto [ev, fv] = take_seam(v);
        net.glue[eu] = fv;
        net.glue[fv] = eu;
        net.glue[ev] = fu;
        net.glue[fu] = ev;
    }

    // Slits merge vertex classes, so marks are rebuilt from scratch: every
    // block corner sits over an augmented point, hence every surviving 2pi
    // class is a marked point of the assembly.
    require_valid(net);
    VertexOrbits orbits = compute_orbits(net);
    for (int o = 0; o < orbits.count(); ++o) {
        if (orbits.angle_units[o] == 1) net.marks.push_back(orbits.orbits[o].front());
    }
    require_valid(net);
    require_involution(net, inv);

    out.net = std::move(net);
    out.involution = std::move(inv);
    return out;
}

RealizationReport verify_realization(const Diagram& dg, const Surface& s, const Involution& inv,
                                     int expected_p, int expected_m) {
    RealizationReport rep;

    ValidationReport vrep = validate_surface(s);
    if (!vrep.ok) {
        for (auto& e : vrep.errors) rep.fail("surface: " + e);
        return rep;
    }
    if (!is_closed(s)) {
        rep.fail("surface has boundary");
        return rep;
    }

    StratumPrediction want = predicted_stratum(dg);
    rep.torus = want.torus;
    rep.stratum = stratum_signature(s);
    if (want.torus) {
        if (!rep.stratum.empty()) rep.fail("expected no cone points, found [" + join(rep.stratum) + "]");
    } else if (rep.stratum != want.orders) {
        rep.fail("cone orders [" + join(rep.stratum) + "] do not match predicted [" +
                 join(want.orders) + "]");
    }

    rep.genus = genus(s);
    int want_genus = predicted_genus(dg);
    if (rep.genus != want_genus) {
        rep.fail("genus " + std::to_string(rep.genus) + " does not match predicted " +
                 std::to_string(want_genus));
    }

    InvolutionReport irep = verify_involution(s, inv);
    if (!irep.ok) {
        for (auto& e : irep.errors) rep.fail("involution: " + e);
        return rep;
    }
    rep.fixed_points = static_cast<int>(irep.fixed_points.size());
    if (rep.fixed_points != 2 * rep.genus + 2) {
        rep.fail("involution has " + std::to_string(rep.fixed_points) + " fixed points, expected " +
                 std::to_string(2 * rep.genus + 2));
    }

    DecomposeResult dec;
    try {
        dec = decompose_vertical(s);
    } catch (const Error& e) {
        rep.fail(std::string("decomposition failed: ") + e.what());
        return rep;
    }
    rep.periodic = dec.periodic_count;
    rep.minimal = dec.minimal_count;
    for (const auto& k : dec.kinds) {
        if (k.kind == PieceKind::MinimalHeuristic) ++rep.uncertified_minimal;
    }
    // Rays that wander into a minimal piece exceed any bound; the piece's
    // certificate plus the diagram isomorphism below vouch for them.  With
    // no minimal piece expected, every ray must land.
    if (expected_m == 0 && dec.exceeded_rays > 0) {
        rep.fail("connection scan exceeded its bound on an all-periodic surface");
    }
    if (rep.periodic != expected_p || rep.minimal != expected_m) {
        rep.fail("decomposition counts (" + std::to_string(rep.periodic) + "," +
                 std::to_string(rep.minimal) + ") do not match expected (" +
                 std::to_string(expected_p) + "," + std::to_string(expected_m) + ")");
    }
    if (rep.uncertified_minimal > 0) {
        rep.fail(std::to_string(rep.uncertified_minimal) + " minimal piece(s) lack a certificate");
    }

    try {
        Diagram got = extract_diagram(s, inv, dec);
        rep.diagram_isomorphic = isomorphic(got, dg);
        if (!rep.diagram_isomorphic) rep.fail("extracted diagram is not isomorphic to the input");
    } catch (const Error& e) {
        rep.fail(std::string("diagram extraction failed: ") + e.what());
    }

    return rep;
}

}  // namespace hypsurf
