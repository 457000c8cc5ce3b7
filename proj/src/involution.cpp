#include "hypsurf/involution.hpp"

#include <algorithm>

#include "hypsurf/errors.hpp"

namespace hypsurf {

void InvolutionReport::fail(std::string msg) {
    ok = false;
    errors.push_back(std::move(msg));
}

namespace {

// Vertex j of polygon i maps to vertex (j - r) mod n of polygon sigma(i).
// Finds r from the image of vertex 0, then checks every vertex.
int find_rotation(const Surface& s, const Involution& inv, int p, InvolutionReport& rep) {
    int q = inv.poly_map[p];
    int n = s.poly_size(p);
    const Vec2& c = inv.centers[p];
    if (s.poly_size(q) != n) {
        rep.fail("polygon " + std::to_string(p) + " maps to a polygon of different size");
        return 0;
    }
    Vec2 image0 = c - s.polys[p][0];
    int k = -1;
    for (int j = 0; j < n; ++j)
        if (s.polys[q][j] == image0) {
            k = j;
            break;
        }
    if (k < 0) {
        rep.fail("polygon " + std::to_string(p) + ": image of vertex 0 is not a vertex of " +
                 std::to_string(q));
        return 0;
    }
    int r = (n - k) % n;
    for (int j = 0; j < n; ++j) {
        if (s.polys[q][(j - r + n) % n] != c - s.polys[p][j]) {
            rep.fail("polygon " + std::to_string(p) + ": point map does not carry it onto " +
                     std::to_string(q));
            return r;
        }
    }
    return r;
}

}  // namespace

InvolutionReport verify_involution(const Surface& s, const Involution& inv) {
    InvolutionReport rep;
    int np = s.poly_count();
    if (static_cast<int>(inv.poly_map.size()) != np ||
        static_cast<int>(inv.centers.size()) != np) {
        rep.fail("involution tables sized for a different surface");
        return rep;
    }
    for (int p = 0; p < np; ++p) {
        int q = inv.poly_map[p];
        if (q < 0 || q >= np || inv.poly_map[q] != p) {
            rep.fail("poly_map is not an involution at polygon " + std::to_string(p));
            return rep;
        }
        if (inv.centers[p] != inv.centers[q]) {
            rep.fail("centers disagree across the pair (" + std::to_string(p) + "," +
                     std::to_string(q) + ")");
            return rep;
        }
    }

    rep.rotation.resize(np);
    for (int p = 0; p < np; ++p) rep.rotation[p] = find_rotation(s, inv, p, rep);
    if (!rep.ok) return rep;

    auto edge_image = [&](int id) {
        auto [p, e] = s.edge_of(id);
        int n = s.poly_size(p);
        return s.edge_id(inv.poly_map[p], (e - rep.rotation[p] + n) % n);
    };
    for (int e = 0; e < s.edge_count(); ++e) {
        int f = s.glue[e];
        int ie = edge_image(e);
        if (f == Surface::BOUNDARY) {
            if (s.glue[ie] != Surface::BOUNDARY)
                rep.fail("boundary edge " + std::to_string(e) + " maps to a glued edge");
        } else if (s.glue[ie] != edge_image(f)) {
            rep.fail("involution does not commute with the gluing at edge " + std::to_string(e));
        }
    }
    if (!rep.ok) return rep;

    // Induced permutation of vertex orbits; must be well defined.
    VertexOrbits orbits = compute_orbits(s);
    std::vector<int> orbit_image(orbits.count(), -1);
    for (int o = 0; o < orbits.count(); ++o) {
        for (const Corner& c : orbits.orbits[o]) {
            int q = inv.poly_map[c.poly];
            int n = s.poly_size(c.poly);
            int img = orbits.orbit_of[q][(c.vertex - rep.rotation[c.poly] + n) % n];
            if (orbit_image[o] < 0) orbit_image[o] = img;
            if (orbit_image[o] != img) {
                rep.fail("corner images of one vertex orbit land in different orbits");
                return rep;
            }
        }
    }
    for (int o = 0; o < orbits.count(); ++o) {
        if (orbits.marked[o] && !orbits.marked[orbit_image[o]]) {
            rep.fail("marked point set is not involution-invariant");
            return rep;
        }
    }

    // Fixed points.  Interior: the rotation center of a self-paired polygon.
    for (int p = 0; p < np; ++p) {
        if (inv.poly_map[p] != p) continue;
        Vec2 center = QuadExt(Rat(1, 2)) * inv.centers[p];
        if (point_in_polygon(s.polys[p], center)) {
            rep.fixed_points.push_back({FixedPointKind::Interior, p, -1, -1, center});
            continue;
        }
        bool is_vertex = std::any_of(s.polys[p].begin(), s.polys[p].end(),
                                     [&](const Vec2& v) { return v == center; });
        if (!is_vertex)
            rep.fail("self-paired polygon " + std::to_string(p) +
                     " has its rotation center on an open boundary edge");
        // Vertex case is collected with the vertex orbits below.
    }

    // Edge midpoints: a glued pair swapped with itself by the involution is
    // fixed exactly at the shared midpoint.
    for (int e = 0; e < s.edge_count(); ++e) {
        int f = s.glue[e];
        if (f == Surface::BOUNDARY || f < e) continue;
        if (edge_image(e) == f) {
            auto [p, l] = s.edge_of(e);
            Vec2 mid = QuadExt(Rat(1, 2)) * (s.edge_tail(p, l) + s.edge_head(p, l));
            rep.fixed_points.push_back({FixedPointKind::EdgeMidpoint, p, l, -1, mid});
        }
    }

    for (int o = 0; o < orbits.count(); ++o) {
        if (orbit_image[o] != o) continue;
        const Corner& c = orbits.orbits[o].front();
        rep.fixed_points.push_back(
            {FixedPointKind::VertexOrbit, -1, -1, o, s.polys[c.poly][c.vertex]});
    }

    if (rep.ok && is_closed(s)) {
        int g = genus(s);
        rep.is_hyperelliptic =
            static_cast<int>(rep.fixed_points.size()) == 2 * g + 2;
    }
    return rep;
}

void require_involution(const Surface& s, const Involution& inv) {
    InvolutionReport rep = verify_involution(s, inv);
    if (!rep.ok) throw InvolutionError("invalid involution: " + rep.errors.front());
}

int involution_edge_image(const Surface& s, const Involution& inv,
                          const InvolutionReport& rep, int edge_id) {
    auto [p, e] = s.edge_of(edge_id);
    int n = s.poly_size(p);
    return s.edge_id(inv.poly_map[p], (e - rep.rotation[p] + n) % n);
}

std::vector<FixedPoint> weierstrass_points(const Surface& s, const Involution& inv) {
    InvolutionReport rep = verify_involution(s, inv);
    if (!rep.ok) throw InvolutionError("invalid involution: " + rep.errors.front());
    if (!rep.is_hyperelliptic)
        throw NotHyperellipticError("fixed point count is not 2g + 2");
    VertexOrbits orbits = compute_orbits(s);
    std::vector<FixedPoint> out;
    for (const FixedPoint& fp : rep.fixed_points) {
        if (fp.kind == FixedPointKind::VertexOrbit && orbits.angle_units[fp.orbit] > 1)
            continue;  // a fixed cone point is not a regular Weierstrass point
        out.push_back(fp);
    }
    return out;
}

int quotient_genus(const Surface& s, const Involution& inv) {
    InvolutionReport rep = verify_involution(s, inv);
    if (!rep.ok) throw InvolutionError("invalid involution: " + rep.errors.front());
    int g = genus(s);
    int fixed = static_cast<int>(rep.fixed_points.size());
    int num = 2 + 2 * g - fixed;
    if (num % 4 != 0 || num < 0)
        throw InvolutionError("fixed point count incompatible with a branched double cover");
    return num / 4;
}

}  // namespace hypsurf
