#include "hypsurf/dissect.hpp"

#include <algorithm>

#include "hypsurf/errors.hpp"

namespace hypsurf {

namespace {

int find_vertex_at(const Surface& s, int poly, const Vec2& p) {
    const auto& verts = s.polys[poly];
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        if (verts[i] == p) return i;
    return -1;
}

int find_directed(const Surface& s, int poly, const Vec2& a, const Vec2& b) {
    const auto& verts = s.polys[poly];
    int n = static_cast<int>(verts.size());
    for (int l = 0; l < n; ++l)
        if (verts[l] == a && verts[(l + 1) % n] == b) return l;
    return -1;
}

bool seg_eq(const PathSegment& a, const PathSegment& b) {
    return a.poly == b.poly && a.from == b.from && a.to == b.to && a.along_edge == b.along_edge;
}

// The involution image of a traced connection, re-expressed in the same
// canonical charts the tracer uses (upward travel, seam runs on the
// up-pointing copy of each glued pair).
std::vector<PathSegment> image_path(const Surface& s, const Involution& inv,
                                    const std::vector<PathSegment>& path) {
    std::vector<PathSegment> out;
    out.reserve(path.size());
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        int p2 = inv.poly_map[it->poly];
        Vec2 lo = inv.centers[it->poly] - it->to;
        Vec2 hi = inv.centers[it->poly] - it->from;
        if (!it->along_edge) {
            out.push_back({p2, lo, hi, false});
        } else {
            int l = find_directed(s, p2, hi, lo);  // the image edge, pointing down
            if (l < 0) throw InvolutionError("involution image of a seam run is not an edge");
            int f = s.glue[s.edge_id(p2, l)];
            if (f == Surface::BOUNDARY)
                throw InvolutionError("involution image of a seam run is unglued");
            auto [fp, fl] = s.edge_of(f);
            out.push_back({fp, s.edge_tail(fp, fl), s.edge_head(fp, fl), true});
        }
    }
    return out;
}

}  // namespace

Dissection dissect(const Surface& s, const Involution& inv, const DecomposeResult& dec) {
    InvolutionReport irep = verify_involution(s, inv);
    if (!irep.ok) throw InvolutionError("involution does not verify: " + irep.errors.front());
    if (!irep.is_hyperelliptic)
        throw NotHyperellipticError("dissection requires a hyperelliptic involution");

    VertexOrbits sorb = compute_orbits(s);
    auto s_augmented = [&](int o) { return sorb.marked[o] || sorb.angle_units[o] > 1; };

    std::vector<int> origin;
    std::vector<std::pair<int, int>> sides;
    Surface cut = cut_along(s, dec.connections, &origin, &sides);
    std::vector<std::vector<int>> members;
    std::vector<Surface> raw = connected_pieces(cut, &members);
    int npieces = static_cast<int>(raw.size());
    if (static_cast<int>(dec.pieces.size()) != npieces)
        throw InvolutionError("decomposition piece count does not match the cut surface");

    std::vector<int> piece_of(cut.poly_count(), -1);
    for (int c = 0; c < npieces; ++c)
        for (int cp : members[c]) piece_of[cp] = c;

    // Pair up the connections under the involution.
    int nconn = static_cast<int>(dec.connections.size());
    std::vector<int> partner(nconn, -1);
    for (int i = 0; i < nconn; ++i) {
        std::vector<PathSegment> img = image_path(s, inv, dec.connections[i].path);
        for (int j = 0; j < nconn; ++j) {
            const auto& cand = dec.connections[j].path;
            if (cand.size() != img.size()) continue;
            bool same = true;
            for (size_t k = 0; same && k < img.size(); ++k) same = seg_eq(cand[k], img[k]);
            if (same) {
                partner[i] = j;
                break;
            }
        }
        if (partner[i] < 0)
            throw InvolutionError("connection set is not involution invariant");
    }
    for (int i = 0; i < nconn; ++i)
        if (partner[partner[i]] != i)
            throw InvolutionError("connection pairing is not an involution");

    Dissection out;
    for (int i = 0; i < nconn; ++i) {
        int pa = piece_of[sides[i].first];
        int pb = piece_of[sides[i].second];
        if (pa == pb) continue;
        int j = partner[i];
        if (j == i)
            throw InvolutionError("a self-paired connection separates two pieces");
        if (j < i) continue;
        int qa = piece_of[sides[j].first];
        int qb = piece_of[sides[j].second];
        if (std::minmax(pa, pb) != std::minmax(qa, qb))
            throw InvolutionError("paired slits join different pieces");
        out.slit_pairs.push_back({std::min(pa, pb), std::max(pa, pb), i, j});
    }
    if (static_cast<int>(out.slit_pairs.size()) != npieces - 1)
        throw InvolutionError("slit count is not one less than the piece count");

    for (int c = 0; c < npieces; ++c) {
        Surface piece = raw[c];
        int n = piece.poly_count();
        std::vector<int> porig(n);
        for (int q = 0; q < n; ++q) porig[q] = origin[members[c][q]];

        // Heal: glue every boundary edge to its involution image.
        for (int q = 0; q < n; ++q) {
            for (int l = 0; l < piece.poly_size(q); ++l) {
                int e = piece.edge_id(q, l);
                if (piece.glue[e] != Surface::BOUNDARY) continue;
                int o = porig[q];
                Vec2 a2 = inv.centers[o] - piece.edge_tail(q, l);
                Vec2 b2 = inv.centers[o] - piece.edge_head(q, l);
                int o2 = inv.poly_map[o];
                int f = -1;
                for (int q2 = 0; q2 < n && f < 0; ++q2) {
                    if (porig[q2] != o2) continue;
                    int l2 = find_directed(piece, q2, a2, b2);
                    if (l2 >= 0) f = piece.edge_id(q2, l2);
                }
                if (f < 0)
                    throw InvolutionError("piece boundary edge has no involution partner");
                if (f == e) throw InvolutionError("boundary edge paired with itself");
                if (piece.glue[f] != Surface::BOUNDARY)
                    throw InvolutionError("involution pairing of boundary edges collides");
                piece.glue[e] = f;
                piece.glue[f] = e;
            }
        }

        // Re-derive marks: augmented points are those over cone or marked
        // points of the original surface; the ones left with angle 2pi
        // become marked points of the piece.
        piece.marks.clear();
        VertexOrbits porb = compute_orbits(piece);
        std::vector<int> augmented;
        for (int ob = 0; ob < porb.count(); ++ob) {
            bool aug = false;
            for (const Corner& cor : porb.orbits[ob]) {
                int w = find_vertex_at(s, porig[cor.poly], piece.polys[cor.poly][cor.vertex]);
                if (w >= 0 && s_augmented(sorb.orbit_of[porig[cor.poly]][w])) {
                    aug = true;
                    break;
                }
            }
            if (aug) {
                augmented.push_back(ob);
                if (porb.angle_units[ob] == 1) piece.marks.push_back(porb.orbits[ob].front());
            } else if (porb.angle_units[ob] != 1) {
                throw InvolutionError("healing created a cone point over a regular point");
            }
        }
        require_valid(piece);
        if (!is_closed(piece)) throw InvolutionError("healed piece is not closed");

        // Restrict the involution: each polygon maps to the one whose
        // vertex set is its pointwise image.
        Involution pinv;
        pinv.poly_map.assign(n, -1);
        pinv.centers.resize(n);
        for (int q = 0; q < n; ++q) {
            int o = porig[q];
            pinv.centers[q] = inv.centers[o];
            std::vector<Vec2> want;
            for (const Vec2& v : piece.polys[q]) want.push_back(inv.centers[o] - v);
            auto key = [](std::vector<Vec2> vs) {
                std::sort(vs.begin(), vs.end(), [](const Vec2& u, const Vec2& w) {
                    if (u.x != w.x) return u.x < w.x;
                    return u.y < w.y;
                });
                return vs;
            };
            std::vector<Vec2> want_key = key(want);
            for (int q2 = 0; q2 < n; ++q2) {
                if (porig[q2] != inv.poly_map[o]) continue;
                if (piece.polys[q2].size() != piece.polys[q].size()) continue;
                if (key(piece.polys[q2]) == want_key) {
                    pinv.poly_map[q] = q2;
                    break;
                }
            }
            if (pinv.poly_map[q] < 0)
                throw InvolutionError("polygon has no involution image inside its piece");
        }
        require_involution(piece, pinv);

        out.pieces.push_back(std::move(piece));
        out.involutions.push_back(std::move(pinv));
        out.augmented_orbits.push_back(std::move(augmented));
    }
    return out;
}

Diagram extract_diagram(const Surface& s, const Involution& inv, const DecomposeResult& dec) {
    Dissection d = dissect(s, inv, dec);
    int n = static_cast<int>(d.pieces.size());
    if (static_cast<int>(dec.kinds.size()) != n)
        throw DomainError("decomposition kinds do not match the pieces");

    Diagram dg;
    std::vector<std::vector<int>> free_solids(n);
    for (int i = 0; i < n; ++i) {
        bool periodic = dec.kinds[i].kind == PieceKind::Periodic;
        dg.vertices.push_back({i, periodic ? VertexKind::Periodic : VertexKind::Minimal});
    }
    for (int i = 0; i < n; ++i) {
        FlowScan scan = find_vertical_saddle_connections(d.pieces[i], default_trace_bound(d.pieces[i]));
        for (size_t k = 0; k < scan.connections.size(); ++k) {
            free_solids[i].push_back(dg.half_edge_count());
            dg.half_edges.push_back({i, HalfEdgeStyle::Solid});
        }
        for (int k = 0; k < scan.exceeded_rays; ++k)
            dg.half_edges.push_back({i, HalfEdgeStyle::Dotted});
    }
    for (const SlitPair& slit : d.slit_pairs) {
        if (free_solids[slit.piece_a].empty() || free_solids[slit.piece_b].empty())
            throw DiagramError("piece has fewer saddle connections than slits");
        int h1 = free_solids[slit.piece_a].back();
        free_solids[slit.piece_a].pop_back();
        int h2 = free_solids[slit.piece_b].back();
        free_solids[slit.piece_b].pop_back();
        dg.full_edges.emplace_back(h1, h2);
    }
    return dg;
}

}  // namespace hypsurf
