#include "hypsurf/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hypsurf/errors.hpp"

namespace hypsurf {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

const Vec2 kUp{0, 1};

}  // namespace

int Surface::edge_base(int poly) const {
    int base = 0;
    for (int p = 0; p < poly; ++p) base += static_cast<int>(polys[p].size());
    return base;
}

std::pair<int, int> Surface::edge_of(int id) const {
    for (int p = 0; p < poly_count(); ++p) {
        int n = poly_size(p);
        if (id < n) return {p, id};
        id -= n;
    }
    throw DomainError("edge id out of range");
}

ValidationReport validate_surface(const Surface& s) {
    ValidationReport rep;
    if (s.field_d < 2 || !is_square_free(s.field_d)) {
        rep.fail("field discriminant not square-free or < 2");
        return rep;
    }
    if (s.polys.empty()) {
        rep.fail("no polygons");
        return rep;
    }

    int total_edges = 0;
    for (int p = 0; p < s.poly_count(); ++p) {
        const auto& poly = s.polys[p];
        int n = static_cast<int>(poly.size());
        total_edges += n;
        std::string tag = "polygon " + std::to_string(p);
        if (n < 3) {
            rep.fail(tag + ": fewer than 3 vertices");
            continue;
        }
        bool coords_ok = true;
        for (const Vec2& v : poly) {
            for (const QuadExt* c : {&v.x, &v.y}) {
                if (!c->is_rational() && c->d() != s.field_d) {
                    rep.fail(tag + ": coordinate outside Q(sqrt(" + s.field_d.str() + "))");
                    coords_ok = false;
                }
            }
        }
        if (!coords_ok) continue;
        bool degenerate = false;
        for (int i = 0; i < n && !degenerate; ++i)
            for (int j = i + 1; j < n; ++j)
                if (poly[i] == poly[j]) {
                    rep.fail(tag + ": repeated vertex");
                    degenerate = true;
                    break;
                }
        if (degenerate) continue;
        for (int i = 0; i < n; ++i) {
            Vec2 in = poly[i] - poly[(i + n - 1) % n];
            Vec2 out = poly[(i + 1) % n] - poly[i];
            // Straight corners (marked points) pass; reversals do not.
            if (cross(in, out).is_zero() && dot(in, out).sign() < 0) {
                rep.fail(tag + ": backtracking spike at vertex " + std::to_string(i));
                degenerate = true;
            }
        }
        if (degenerate) continue;
        if (polygon_area2(poly).sign() <= 0) {
            rep.fail(tag + ": not counter-clockwise (non-positive area)");
            continue;
        }
        if (!polygon_is_simple(poly)) rep.fail(tag + ": self-intersecting boundary");
    }
    if (!rep.ok) return rep;

    if (static_cast<int>(s.glue.size()) != total_edges) {
        rep.fail("gluing table size != edge count");
        return rep;
    }
    for (int e = 0; e < total_edges; ++e) {
        int f = s.glue[e];
        if (f == Surface::BOUNDARY) continue;
        if (f < 0 || f >= total_edges) {
            rep.fail("edge " + std::to_string(e) + ": partner out of range");
            continue;
        }
        if (f == e) {
            rep.fail("edge " + std::to_string(e) + ": glued to itself");
            continue;
        }
        if (s.glue[f] != e) {
            rep.fail("edge " + std::to_string(e) + ": gluing not involutive");
            continue;
        }
        if (e < f) {
            auto [pe, le] = s.edge_of(e);
            auto [pf, lf] = s.edge_of(f);
            if (s.edge_vec(pe, le) != -s.edge_vec(pf, lf))
                rep.fail("edges " + std::to_string(e) + "," + std::to_string(f) +
                         ": orientation violation (vectors must be opposite)");
        }
    }
    if (!rep.ok) return rep;

    if (!is_connected(s)) rep.fail("glued complex is disconnected");

    for (const Corner& c : s.marks) {
        if (c.poly < 0 || c.poly >= s.poly_count() || c.vertex < 0 ||
            c.vertex >= s.poly_size(c.poly)) {
            rep.fail("mark references a nonexistent corner");
            return rep;
        }
    }
    for (const auto& cert : s.certificates) {
        if (cert.poly < 0 || cert.poly >= s.poly_count()) {
            rep.fail("certificate references a nonexistent polygon");
            return rep;
        }
    }
    if (!rep.ok) return rep;

    VertexOrbits orbits = compute_orbits(s);
    std::vector<bool> seen(orbits.count(), false);
    for (const Corner& c : s.marks) {
        int o = orbits.orbit_at(c);
        if (seen[o]) rep.fail("two marks on one vertex orbit");
        seen[o] = true;
        if (!orbits.on_boundary[o] && orbits.angle_units[o] != 1)
            rep.fail("marked orbit has cone angle != 2pi");
    }
    return rep;
}

void require_valid(const Surface& s) {
    ValidationReport rep = validate_surface(s);
    if (!rep.ok) throw GeometryError("invalid surface: " + rep.errors.front());
}

bool is_connected(const Surface& s) {
    int np = s.poly_count();
    if (np == 0) return false;
    std::vector<bool> seen(np, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        int base = s.edge_base(p);
        for (int e = 0; e < s.poly_size(p); ++e) {
            int f = s.glue[base + e];
            if (f == Surface::BOUNDARY) continue;
            int q = s.edge_of(f).first;
            if (!seen[q]) {
                seen[q] = true;
                stack.push_back(q);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_closed(const Surface& s) {
    return std::none_of(s.glue.begin(), s.glue.end(),
                        [](int f) { return f == Surface::BOUNDARY; });
}

VertexOrbits compute_orbits(const Surface& s) {
    int np = s.poly_count();
    std::vector<int> base(np), sizes(np);
    int total = 0;
    for (int p = 0; p < np; ++p) {
        base[p] = total;
        sizes[p] = s.poly_size(p);
        total += sizes[p];
    }
    auto flat = [&](const Corner& c) { return base[c.poly] + c.vertex; };

    // A gluing e<->f identifies tail(e) with head(f) and head(e) with tail(f).
    UnionFind uf(total);
    for (int e = 0; e < s.edge_count(); ++e) {
        int f = s.glue[e];
        if (f == Surface::BOUNDARY || f < e) continue;
        auto [pe, le] = s.edge_of(e);
        auto [pf, lf] = s.edge_of(f);
        uf.unite(flat({pe, le}), flat({pf, (lf + 1) % sizes[pf]}));
        uf.unite(flat({pe, (le + 1) % sizes[pe]}), flat({pf, lf}));
    }

    VertexOrbits out;
    out.orbit_of.resize(np);
    std::vector<int> index_of_root(total, -1);
    for (int p = 0; p < np; ++p) {
        out.orbit_of[p].resize(sizes[p]);
        for (int v = 0; v < sizes[p]; ++v) {
            int root = uf.find(flat({p, v}));
            if (index_of_root[root] < 0) {
                index_of_root[root] = static_cast<int>(out.orbits.size());
                out.orbits.emplace_back();
            }
            int idx = index_of_root[root];
            out.orbit_of[p][v] = idx;
            out.orbits[idx].push_back({p, v});
        }
    }

    int no = out.count();
    out.angle_units.assign(no, 0);
    out.on_boundary.assign(no, false);
    out.marked.assign(no, false);
    for (int p = 0; p < np; ++p) {
        int b = s.edge_base(p);
        for (int v = 0; v < sizes[p]; ++v) {
            int o = out.orbit_of[p][v];
            int incoming = b + (v + sizes[p] - 1) % sizes[p];
            if (s.glue[b + v] == Surface::BOUNDARY || s.glue[incoming] == Surface::BOUNDARY)
                out.on_boundary[o] = true;
            // Interior sector at the corner: outgoing direction swept CCW to
            // the incoming-reversed direction.  Counting a fixed reference
            // direction over half-open sectors yields full turns exactly.
            Vec2 outdir = s.polys[p][(v + 1) % sizes[p]] - s.polys[p][v];
            Vec2 backdir = s.polys[p][(v + sizes[p] - 1) % sizes[p]] - s.polys[p][v];
            if (in_half_open_ccw(outdir, backdir, kUp)) ++out.angle_units[o];
        }
    }
    for (int o = 0; o < no; ++o)
        if (out.on_boundary[o]) out.angle_units[o] = -1;
    for (const Corner& c : s.marks) out.marked[out.orbit_at(c)] = true;
    return out;
}

std::vector<ConePoint> cone_points(const Surface& s) {
    VertexOrbits orbits = compute_orbits(s);
    std::vector<ConePoint> out;
    out.reserve(orbits.count());
    for (int o = 0; o < orbits.count(); ++o) {
        ConePoint cp;
        cp.orbit = o;
        cp.angle_units = orbits.angle_units[o];
        cp.is_true_cone = orbits.angle_units[o] > 1;
        cp.marked = orbits.marked[o];
        cp.corners = orbits.orbits[o];
        out.push_back(std::move(cp));
    }
    return out;
}

int total_cone_angle(const Surface& s, bool true_cones_only) {
    VertexOrbits orbits = compute_orbits(s);
    int sum = 0;
    for (int o = 0; o < orbits.count(); ++o) {
        if (orbits.angle_units[o] < 0)
            throw DomainError("cone angle undefined on a surface with boundary");
        if (true_cones_only && orbits.angle_units[o] == 1) continue;
        sum += orbits.angle_units[o];
    }
    return sum;
}

int genus(const Surface& s) {
    if (!is_closed(s)) throw DomainError("genus requires a closed surface");
    VertexOrbits orbits = compute_orbits(s);
    int V = orbits.count();
    int E = s.edge_count() / 2;
    int F = s.poly_count();
    int chi = V - E + F;
    if (chi % 2 != 0 || chi > 2) throw GeometryError("impossible Euler characteristic");
    return (2 - chi) / 2;
}

std::vector<int> stratum_signature(const Surface& s) {
    VertexOrbits orbits = compute_orbits(s);
    std::vector<int> orders;
    for (int o = 0; o < orbits.count(); ++o) {
        if (orbits.angle_units[o] < 0)
            throw DomainError("stratum undefined on a surface with boundary");
        if (orbits.angle_units[o] > 1) orders.push_back(orbits.angle_units[o] - 1);
    }
    std::sort(orders.rbegin(), orders.rend());
    return orders;
}

QuadExt area(const Surface& s) {
    QuadExt twice = 0;
    for (const auto& poly : s.polys) twice += polygon_area2(poly);
    return twice / QuadExt(2);
}

Surface apply_shear(const Surface& s, const Mat2& matrix, const std::vector<int>& region) {
    if (matrix.det().sign() <= 0) throw GeometryError("shear matrix must preserve orientation");
    Surface out = s;
    std::vector<bool> in_region(s.poly_count(), region.empty());
    for (int p : region) {
        if (p < 0 || p >= s.poly_count()) throw DomainError("shear region polygon out of range");
        in_region[p] = true;
    }
    for (int p = 0; p < out.poly_count(); ++p) {
        if (!in_region[p]) continue;
        for (Vec2& v : out.polys[p]) v = matrix.apply(v);
    }
    bool keeps_horizontal = matrix.c.is_zero();
    std::vector<CrossCircleCertificate> kept;
    for (const auto& cert : out.certificates) {
        if (!in_region[cert.poly]) {
            kept.push_back(cert);
        } else if (keeps_horizontal) {
            kept.push_back({cert.poly, matrix.apply(cert.point)});
        }
    }
    out.certificates = std::move(kept);
    ValidationReport rep = validate_surface(out);
    if (!rep.ok) throw GluingError("shear broke the surface: " + rep.errors.front());
    return out;
}

Surface translated(const Surface& s, const Vec2& t) {
    Surface out = s;
    for (auto& poly : out.polys)
        for (Vec2& v : poly) v = v + t;
    for (auto& cert : out.certificates) cert.point = cert.point + t;
    return out;
}

void insert_edge_point(Surface& s, int edge, const Vec2& p) {
    auto [pe, le] = s.edge_of(edge);
    const Vec2 a = s.edge_tail(pe, le);
    const Vec2 b = s.edge_head(pe, le);
    if (!on_segment(a, b, p) || p == a || p == b)
        throw GeometryError("insertion point not strictly inside the edge");

    struct Insertion {
        int poly, edge;
        Vec2 point;
    };
    std::vector<Insertion> ins{{pe, le, p}};
    int partner = s.glue[edge];
    if (partner != Surface::BOUNDARY) {
        auto [pf, lf] = s.edge_of(partner);
        // Identification moves tail(e) to head(f); the split point moves with it.
        Vec2 tau = s.edge_head(pf, lf) - a;
        ins.push_back({pf, lf, p + tau});
    }

    // Positions of inserted vertices per polygon, for index remapping.
    std::vector<std::vector<int>> added(s.poly_count());
    for (const auto& i : ins) added[i.poly].push_back(i.edge);
    auto shift = [&](int poly, int idx) {
        int d = 0;
        for (int pos : added[poly])
            if (pos < idx) ++d;
        return idx + d;
    };

    Surface out;
    out.field_d = s.field_d;
    out.polys = s.polys;
    std::stable_sort(ins.begin(), ins.end(),
                     [](const Insertion& x, const Insertion& y) { return x.edge > y.edge; });
    for (const auto& i : ins)
        out.polys[i.poly].insert(out.polys[i.poly].begin() + i.edge + 1, i.point);

    out.glue.assign(s.edge_count() + static_cast<int>(ins.size()), Surface::BOUNDARY);
    auto new_id = [&](int old_id) {
        auto [p, l] = s.edge_of(old_id);
        return out.edge_id(p, shift(p, l));
    };
    for (int e = 0; e < s.edge_count(); ++e) {
        int f = s.glue[e];
        if (f == Surface::BOUNDARY || e == edge || e == partner) continue;
        if (f == edge || f == partner) continue;
        out.glue[new_id(e)] = new_id(f);
    }
    // Split edge e = (A->B) into (A->p) and (p->B); likewise the partner
    // f = (C->D) into (C->p'), (p'->D).  Matching halves: (A->p) <-> (p'->D)
    // and (p->B) <-> (C->p').
    int eA = new_id(edge);
    if (partner == Surface::BOUNDARY) {
        out.glue[eA] = Surface::BOUNDARY;
        out.glue[eA + 1] = Surface::BOUNDARY;
    } else {
        int fC = new_id(partner);
        out.glue[eA] = fC + 1;
        out.glue[fC + 1] = eA;
        out.glue[eA + 1] = fC;
        out.glue[fC] = eA + 1;
    }

    out.marks = s.marks;
    for (Corner& c : out.marks) c.vertex = shift(c.poly, c.vertex);
    out.certificates = s.certificates;
    s = std::move(out);
}

int split_polygon_chord(Surface& s, int poly, int vi, int vj) {
    int n = s.poly_size(poly);
    if (vi < 0 || vi >= n || vj < 0 || vj >= n || vi == vj)
        throw DomainError("bad chord vertex indices");
    if ((vj - vi + n) % n == 1 || (vi - vj + n) % n == 1)
        throw GeometryError("chord endpoints are adjacent vertices");
    const auto& verts = s.polys[poly];
    const Vec2& A = verts[vi];
    const Vec2& B = verts[vj];
    for (int k = 0; k < n; ++k) {
        const Vec2& c = verts[k];
        const Vec2& d = verts[(k + 1) % n];
        bool incident = (k == vi || (k + 1) % n == vi || k == vj || (k + 1) % n == vj);
        if (incident) {
            if (segments_overlap_improperly(A, B, c, d))
                throw GeometryError("chord overlaps an incident edge");
        } else if (on_segment(A, B, c) || on_segment(A, B, d) || on_segment(c, d, A) ||
                   on_segment(c, d, B) || segments_overlap_improperly(A, B, c, d)) {
            throw GeometryError("chord crosses the polygon boundary");
        }
    }
    Vec2 mid = QuadExt(Rat(1, 2)) * (A + B);
    if (!point_in_polygon(verts, mid)) throw GeometryError("chord lies outside the polygon");

    // First part keeps vertices vi..vj (with closing edge vj->vi), second
    // part vj..vi (closing edge vi->vj).
    std::vector<Vec2> part1, part2;
    std::vector<int> old_index1, old_index2;
    for (int k = vi;; k = (k + 1) % n) {
        part1.push_back(verts[k]);
        old_index1.push_back(k);
        if (k == vj) break;
    }
    for (int k = vj;; k = (k + 1) % n) {
        part2.push_back(verts[k]);
        old_index2.push_back(k);
        if (k == vi) break;
    }
    int len1 = static_cast<int>(part1.size());
    int len2 = static_cast<int>(part2.size());
    int new_poly = s.poly_count();

    // Old local edge -> (new poly, new local edge).  Edge k survives in
    // part1 iff k lies in the arc vi..vj-1.
    auto relocate = [&](int k) -> std::pair<int, int> {
        int off1 = (k - vi + n) % n;
        if (off1 < len1 - 1) return {poly, off1};
        return {new_poly, (k - vj + n) % n};
    };

    Surface out;
    out.field_d = s.field_d;
    out.polys = s.polys;
    out.polys[poly] = part1;
    out.polys.push_back(part2);

    out.glue.assign(s.edge_count() + 2, Surface::BOUNDARY);
    auto new_id = [&](int old_id) {
        auto [p, l] = s.edge_of(old_id);
        if (p != poly) return out.edge_id(p, l);
        auto [np, nl] = relocate(l);
        return out.edge_id(np, nl);
    };
    for (int e = 0; e < s.edge_count(); ++e) {
        int f = s.glue[e];
        if (f == Surface::BOUNDARY) continue;
        out.glue[new_id(e)] = new_id(f);
    }
    int chord1 = out.edge_id(poly, len1 - 1);
    int chord2 = out.edge_id(new_poly, len2 - 1);
    out.glue[chord1] = chord2;
    out.glue[chord2] = chord1;

    out.marks = s.marks;
    for (Corner& c : out.marks) {
        if (c.poly != poly) continue;
        int off1 = (c.vertex - vi + n) % n;
        if (off1 < len1) {
            c.vertex = off1;
        } else {
            c.poly = new_poly;
            c.vertex = (c.vertex - vj + n) % n;
        }
    }
    out.certificates = s.certificates;
    for (auto& cert : out.certificates) {
        if (cert.poly != poly) continue;
        if (point_in_polygon(part1, cert.point) || [&] {
                for (int k = 0; k + 1 < len1; ++k)
                    if (on_segment(part1[k], part1[k + 1], cert.point)) return true;
                return false;
            }())
            continue;  // stays with `poly`
        cert.poly = new_poly;
    }
    s = std::move(out);
    return new_poly;
}

}  // namespace hypsurf
