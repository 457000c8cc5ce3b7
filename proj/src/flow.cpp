#include "hypsurf/flow.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "hypsurf/errors.hpp"

namespace hypsurf {

namespace {

const Vec2 kUp{0, 1};
constexpr int kMaxSteps = 1000000;

bool is_augmented(const VertexOrbits& orbits, int o) {
    return orbits.on_boundary[o] || orbits.marked[o] || orbits.angle_units[o] > 1;
}

Surface transformed(const Surface& s, Vec2 (*f)(const Vec2&)) {
    Surface out = s;
    for (auto& poly : out.polys)
        for (Vec2& v : poly) v = f(v);
    for (auto& cert : out.certificates) cert.point = f(cert.point);
    return out;
}

Vec2 rot_ccw(const Vec2& v) { return {-v.y, v.x}; }
Vec2 rot_ccw_inv(const Vec2& v) { return {v.y, -v.x}; }
Vec2 rot_180(const Vec2& v) { return {-v.x, -v.y}; }

// The vertical flow, followed upward through gluings.  Positions alternate
// between interior-chord charts (point whose upward germ enters a polygon
// interior) and seam charts (point on a vertical edge, moving along it).
class Tracer {
  public:
    Tracer(const Surface& s, const VertexOrbits& orbits, QuadExt bound)
        : s_(s), orbits_(orbits), bound_(std::move(bound)) {}

    void start_from_ray(const UpRay& ray) {
        enter_germ(ray);
        watch_closure_ = false;
    }

    // Start at a point of the given polygon (interior or on an edge) and
    // watch for the leaf closing up onto the start.
    void start_from_point(int poly, const Vec2& start) {
        if (poly < 0 || poly >= s_.poly_count()) throw DomainError("start polygon out of range");
        const auto& verts = s_.polys[poly];
        int n = static_cast<int>(verts.size());
        for (const Vec2& v : verts)
            if (v == start) throw DomainError("leaf traces cannot start at a vertex");
        int on_edge = -1;
        for (int l = 0; l < n; ++l)
            if (on_segment(verts[l], verts[(l + 1) % n], start)) {
                on_edge = l;
                break;
            }
        if (on_edge < 0) {
            if (!point_in_polygon(verts, start))
                throw DomainError("start point is not on the polygon");
            mode_ = Mode::Interior;
            poly_ = poly;
            point_ = start;
        } else {
            Vec2 ev = s_.edge_vec(poly, on_edge);
            int id = s_.edge_id(poly, on_edge);
            if (ev.x.is_zero()) {
                if (ev.y.sign() > 0) {
                    set_seam(id, false, start);
                } else if (s_.glue[id] == Surface::BOUNDARY) {
                    set_seam(id, true, start);
                } else {
                    // switch to the upward copy of the seam
                    int f = s_.glue[id];
                    auto [fp, fl] = s_.edge_of(f);
                    Vec2 tau = s_.edge_head(fp, fl) - verts[on_edge];
                    set_seam(f, false, start + tau);
                }
            } else {
                // upward germ lies on the side where up points into the polygon
                if (cross(ev, kUp).sign() > 0) {
                    mode_ = Mode::Interior;
                    poly_ = poly;
                    point_ = start;
                } else if (s_.glue[id] == Surface::BOUNDARY) {
                    finish(TraceStop::LeftBoundary);
                } else {
                    int f = s_.glue[id];
                    auto [fp, fl] = s_.edge_of(f);
                    mode_ = Mode::Interior;
                    poly_ = fp;
                    point_ = start + (s_.edge_head(fp, fl) - verts[on_edge]);
                }
            }
        }
        watch_closure_ = true;
        start_interior_ = mode_ == Mode::Interior;
        start_chart_ = start_interior_ ? poly_ : edge_;
        start_point_ = start_interior_ ? point_ : point_;
    }

    TraceResult run() {
        for (int step = 0; !done_ && step < kMaxSteps; ++step) {
            if (res_.length > bound_) {
                finish(TraceStop::Exceeded);
                break;
            }
            if (mode_ == Mode::Interior)
                chord_step();
            else
                seam_step();
        }
        if (!done_) finish(TraceStop::Exceeded);
        return std::move(res_);
    }

  private:
    enum class Mode { Interior, Seam };

    void finish(TraceStop stop, int orbit = -1) {
        res_.stop = stop;
        res_.orbit = orbit;
        done_ = true;
    }

    void set_seam(int edge, bool rev, Vec2 pos) {
        mode_ = Mode::Seam;
        edge_ = edge;
        rev_ = rev;
        point_ = std::move(pos);
    }

    void enter_germ(const UpRay& ray) {
        const Corner& c = ray.corner;
        int n = s_.poly_size(c.poly);
        const Vec2& v = s_.polys[c.poly][c.vertex];
        if (!ray.along_edge) {
            mode_ = Mode::Interior;
            poly_ = c.poly;
            point_ = v;
        } else if (!ray.reversed) {
            set_seam(s_.edge_id(c.poly, c.vertex), false, v);
        } else {
            set_seam(s_.edge_id(c.poly, (c.vertex + n - 1) % n), true, v);
        }
    }

    void arrive_at_orbit(const Corner& c, int advanced_orbit = -1) {
        int o = advanced_orbit >= 0 ? advanced_orbit : orbits_.orbit_at(c);
        if (is_augmented(orbits_, o)) {
            finish(TraceStop::HitOrbit, o);
            return;
        }
        std::vector<UpRay> rays = upward_rays(s_, orbits_, o);
        if (rays.size() != 1)
            throw DomainError("no unique upward continuation at a regular vertex");
        enter_germ(rays.front());
    }

    void chord_step() {
        const auto& verts = s_.polys[poly_];
        int n = static_cast<int>(verts.size());
        const Vec2 a = point_;

        bool have = false;
        QuadExt best_y;
        int exit_vertex = -1, exit_edge = -1;
        auto offer_vertex = [&](int idx) {
            const QuadExt& y = verts[idx].y;
            if (!(y > a.y)) return;
            if (!have || y < best_y) {
                have = true;
                best_y = y;
                exit_vertex = idx;
                exit_edge = -1;
            }
        };
        for (int l = 0; l < n; ++l) {
            const Vec2& c = verts[l];
            const Vec2& d = verts[(l + 1) % n];
            QuadExt dc = c.x - a.x, dd = d.x - a.x;
            int sc = dc.sign(), sd = dd.sign();
            if (sc == 0) {
                offer_vertex(l);
                continue;  // endpoint d handled as the next edge's start
            }
            if (sd == 0 || sc == sd) continue;
            QuadExt y = c.y + (d.y - c.y) * (-dc) / (dd - dc);
            if (!(y > a.y)) continue;
            if (!have || y < best_y) {
                have = true;
                best_y = y;
                exit_edge = l;
                exit_vertex = -1;
            }
        }
        if (!have) throw GeometryError("vertical flow found no exit from a polygon");
        Vec2 q = exit_vertex >= 0 ? verts[exit_vertex] : Vec2{a.x, best_y};

        if (watch_closure_ && start_interior_ && poly_ == start_chart_ &&
            a.x == start_point_.x && a.y <= start_point_.y && start_point_.y <= q.y) {
            QuadExt gained = start_point_.y - a.y;
            if ((res_.length + gained).sign() > 0) {
                res_.path.push_back({poly_, a, start_point_, false});
                res_.length += gained;
                finish(TraceStop::Closed);
                return;
            }
        }

        res_.path.push_back({poly_, a, q, false});
        res_.length += q.y - a.y;

        if (exit_vertex >= 0) {
            arrive_at_orbit({poly_, exit_vertex});
            return;
        }
        int id = s_.edge_id(poly_, exit_edge);
        int f = s_.glue[id];
        if (f == Surface::BOUNDARY) {
            finish(TraceStop::LeftBoundary);
            return;
        }
        auto [fp, fl] = s_.edge_of(f);
        point_ = q + (s_.edge_head(fp, fl) - verts[exit_edge]);
        poly_ = fp;
    }

    void seam_step() {
        auto [p, l] = s_.edge_of(edge_);
        int n = s_.poly_size(p);
        const Vec2& tail = s_.polys[p][l];
        const Vec2& head = s_.polys[p][(l + 1) % n];
        const Vec2& target = rev_ ? tail : head;
        const Vec2 a = point_;

        if (watch_closure_ && !start_interior_ && edge_ == start_chart_ &&
            a.y <= start_point_.y && start_point_.y <= target.y) {
            QuadExt gained = start_point_.y - a.y;
            if ((res_.length + gained).sign() > 0) {
                res_.path.push_back({p, a, start_point_, true});
                res_.length += gained;
                finish(TraceStop::Closed);
                return;
            }
        }

        res_.path.push_back({p, a, target, true});
        res_.length += target.y - a.y;
        arrive_at_orbit({p, rev_ ? l : (l + 1) % n});
    }

    const Surface& s_;
    const VertexOrbits& orbits_;
    QuadExt bound_;
    TraceResult res_;
    bool done_ = false;

    Mode mode_ = Mode::Interior;
    int poly_ = -1;
    int edge_ = -1;
    bool rev_ = false;
    Vec2 point_;

    bool watch_closure_ = false;
    bool start_interior_ = false;
    int start_chart_ = -1;
    Vec2 start_point_;
};

}  // namespace

QuadExt default_trace_bound(const Surface& s) {
    QuadExt total = 0;
    for (int p = 0; p < s.poly_count(); ++p)
        for (int e = 0; e < s.poly_size(p); ++e) {
            Vec2 v = s.edge_vec(p, e);
            total += abs(v.x) + abs(v.y);
        }
    return QuadExt(100) * total;
}

std::vector<UpRay> upward_rays(const Surface& s, const VertexOrbits& orbits, int orbit) {
    std::vector<UpRay> rays;
    for (const Corner& c : orbits.orbits[orbit]) {
        int n = s.poly_size(c.poly);
        const Vec2& v = s.polys[c.poly][c.vertex];
        Vec2 out = s.polys[c.poly][(c.vertex + 1) % n] - v;
        Vec2 back = s.polys[c.poly][(c.vertex + n - 1) % n] - v;
        if (strictly_inside_ccw(out, back, kUp)) {
            rays.push_back({orbit, c, false, false});
        }
        if (same_direction(out, kUp)) {
            rays.push_back({orbit, c, true, false});
        }
        // A downward unglued edge carries an upward germ at its head; glued
        // ones are covered by the partner's tail.
        int back_edge = s.edge_id(c.poly, (c.vertex + n - 1) % n);
        if (same_direction(back, kUp) && s.glue[back_edge] == Surface::BOUNDARY) {
            rays.push_back({orbit, c, true, true});
        }
    }
    return rays;
}

TraceResult trace_separatrix(const Surface& s, const UpRay& ray, const QuadExt& bound) {
    VertexOrbits orbits = compute_orbits(s);
    Tracer t(s, orbits, bound);
    t.start_from_ray(ray);
    return t.run();
}

TraceResult trace_leaf(const Surface& s, int poly, const Vec2& start, const QuadExt& bound) {
    VertexOrbits orbits = compute_orbits(s);
    Tracer t(s, orbits, bound);
    t.start_from_point(poly, start);
    return t.run();
}

FlowScan find_vertical_saddle_connections(const Surface& s, const QuadExt& bound) {
    VertexOrbits orbits = compute_orbits(s);
    FlowScan scan;
    for (int o = 0; o < orbits.count(); ++o) {
        if (!is_augmented(orbits, o)) continue;
        for (const UpRay& ray : upward_rays(s, orbits, o)) {
            TraceResult r = trace_separatrix(s, ray, bound);
            if (r.stop == TraceStop::HitOrbit) {
                scan.connections.push_back({o, r.orbit, r.length, std::move(r.path)});
            } else if (r.stop == TraceStop::Exceeded) {
                ++scan.exceeded_rays;
            }
        }
    }
    std::sort(scan.connections.begin(), scan.connections.end(),
              [](const VerticalConnection& x, const VerticalConnection& y) {
                  if (x.length != y.length) return x.length < y.length;
                  if (x.from_orbit != y.from_orbit) return x.from_orbit < y.from_orbit;
                  if (x.to_orbit != y.to_orbit) return x.to_orbit < y.to_orbit;
                  const Vec2& a = x.path.front().from;
                  const Vec2& b = y.path.front().from;
                  if (a.x != b.x) return a.x < b.x;
                  return a.y < b.y;
              });
    return scan;
}

namespace {

struct PendingCut {
    bool seam;
    int poly;  // current polygon index, updated as polygons split
    Vec2 a, b;
    int conn;  // which connection this segment belongs to
};

int find_vertex(const Surface& s, int poly, const Vec2& p) {
    const auto& verts = s.polys[poly];
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        if (verts[i] == p) return i;
    return -1;
}

int find_edge_with(const Surface& s, int poly, const Vec2& p) {
    const auto& verts = s.polys[poly];
    int n = static_cast<int>(verts.size());
    for (int l = 0; l < n; ++l) {
        const Vec2& c = verts[l];
        const Vec2& d = verts[(l + 1) % n];
        if (on_segment(c, d, p) && p != c && p != d) return l;
    }
    return -1;
}

int find_directed_edge(const Surface& s, int poly, const Vec2& a, const Vec2& b) {
    const auto& verts = s.polys[poly];
    int n = static_cast<int>(verts.size());
    for (int l = 0; l < n; ++l)
        if (verts[l] == a && verts[(l + 1) % n] == b) return l;
    return -1;
}

}  // namespace

Surface cut_along(const Surface& s, const std::vector<VerticalConnection>& connections,
                  std::vector<int>* poly_origin, std::vector<std::pair<int, int>>* opened_sides) {
    std::vector<PendingCut> cuts;
    for (size_t i = 0; i < connections.size(); ++i)
        for (const PathSegment& seg : connections[i].path)
            cuts.push_back({seg.along_edge, seg.poly, seg.from, seg.to, static_cast<int>(i)});

    Surface out = s;
    std::vector<int> origin(s.poly_count());
    for (int p = 0; p < s.poly_count(); ++p) origin[p] = p;
    std::vector<std::pair<int, int>> sides(connections.size(), {-1, -1});
    auto record_sides = [&](int conn, int pa, int pb) {
        if (sides[conn].first < 0) sides[conn] = {pa, pb};
    };

    // Make every interior cut endpoint a vertex.
    for (const PendingCut& cut : cuts) {
        if (cut.seam) continue;
        for (const Vec2* p : {&cut.a, &cut.b}) {
            if (find_vertex(out, cut.poly, *p) >= 0) continue;
            int l = find_edge_with(out, cut.poly, *p);
            if (l < 0) throw GeometryError("cut endpoint is not on its polygon boundary");
            insert_edge_point(out, out.edge_id(cut.poly, l), *p);
        }
    }

    // Split polygons along interior cuts, opening each cut as it is made,
    // and keep the remaining cuts' polygon indices current.
    for (size_t i = 0; i < cuts.size(); ++i) {
        if (cuts[i].seam) continue;
        int p = cuts[i].poly;
        int vi = find_vertex(out, p, cuts[i].a);
        int vj = find_vertex(out, p, cuts[i].b);
        if (vi < 0 || vj < 0) throw GeometryError("cut endpoint vertex vanished");
        int q = split_polygon_chord(out, p, vi, vj);
        origin.push_back(origin[p]);
        int c1 = out.edge_id(p, out.poly_size(p) - 1);
        int c2 = out.edge_id(q, out.poly_size(q) - 1);
        if (out.glue[c1] != c2) throw GeometryError("chord halves not glued as expected");
        out.glue[c1] = Surface::BOUNDARY;
        out.glue[c2] = Surface::BOUNDARY;
        record_sides(cuts[i].conn, p, q);
        for (size_t j = i + 1; j < cuts.size(); ++j) {
            if (cuts[j].poly != p) continue;
            if (cuts[j].seam) {
                if (find_directed_edge(out, p, cuts[j].a, cuts[j].b) < 0) cuts[j].poly = q;
            } else {
                Vec2 mid = QuadExt(Rat(1, 2)) * (cuts[j].a + cuts[j].b);
                if (!point_in_polygon(out.polys[p], mid)) cuts[j].poly = q;
            }
        }
    }

    for (const PendingCut& cut : cuts) {
        if (!cut.seam) continue;
        int l = find_directed_edge(out, cut.poly, cut.a, cut.b);
        if (l < 0) throw GeometryError("seam cut edge vanished");
        int e = out.edge_id(cut.poly, l);
        int f = out.glue[e];
        if (f == Surface::BOUNDARY) throw GeometryError("seam cut edge already unglued");
        out.glue[e] = Surface::BOUNDARY;
        out.glue[f] = Surface::BOUNDARY;
        record_sides(cut.conn, cut.poly, out.edge_of(f).first);
    }
    if (poly_origin) *poly_origin = std::move(origin);
    if (opened_sides) *opened_sides = std::move(sides);
    return out;
}

std::vector<Surface> connected_pieces(const Surface& s, std::vector<std::vector<int>>* out_members) {
    int np = s.poly_count();
    std::vector<int> comp(np, -1);
    int ncomp = 0;
    for (int seed = 0; seed < np; ++seed) {
        if (comp[seed] >= 0) continue;
        std::vector<int> stack{seed};
        comp[seed] = ncomp;
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            int base = s.edge_base(p);
            for (int e = 0; e < s.poly_size(p); ++e) {
                int f = s.glue[base + e];
                if (f == Surface::BOUNDARY) continue;
                int q = s.edge_of(f).first;
                if (comp[q] < 0) {
                    comp[q] = ncomp;
                    stack.push_back(q);
                }
            }
        }
        ++ncomp;
    }

    std::vector<Surface> pieces(ncomp);
    std::vector<std::vector<int>> members(ncomp);
    std::vector<int> new_index(np, -1);
    for (int p = 0; p < np; ++p) {
        new_index[p] = static_cast<int>(members[comp[p]].size());
        members[comp[p]].push_back(p);
    }
    for (int c = 0; c < ncomp; ++c) {
        Surface& piece = pieces[c];
        piece.field_d = s.field_d;
        int total_edges = 0;
        for (int p : members[c]) {
            piece.polys.push_back(s.polys[p]);
            total_edges += s.poly_size(p);
        }
        piece.glue.assign(total_edges, Surface::BOUNDARY);
        for (int p : members[c]) {
            for (int e = 0; e < s.poly_size(p); ++e) {
                int f = s.glue[s.edge_id(p, e)];
                if (f == Surface::BOUNDARY) continue;
                auto [fp, fl] = s.edge_of(f);
                piece.glue[piece.edge_id(new_index[p], e)] = piece.edge_id(new_index[fp], fl);
            }
        }
        for (const Corner& m : s.marks)
            if (comp[m.poly] == c) piece.marks.push_back({new_index[m.poly], m.vertex});
        for (const auto& cert : s.certificates)
            if (comp[cert.poly] == c) piece.certificates.push_back({new_index[cert.poly], cert.point});
    }
    if (out_members) *out_members = std::move(members);
    return pieces;
}

namespace {

// The traced cross circle, in the piece's own coordinates, as a circular
// sequence of left-to-right horizontal segments with cumulative offsets.
struct Section {
    std::vector<PathSegment> segs;
    std::vector<QuadExt> offset;
    QuadExt total;
    std::map<int, QuadExt> vertex_param;  // orbit -> parameter, for circle points at vertices

    std::pair<int, Vec2> point_at(const QuadExt& t) const {
        for (size_t k = 0; k < segs.size(); ++k) {
            QuadExt len = segs[k].to.x - segs[k].from.x;
            if (t >= offset[k] && t < offset[k] + len)
                return {segs[k].poly, Vec2{segs[k].from.x + (t - offset[k]), segs[k].from.y}};
        }
        throw DomainError("section parameter out of range");
    }
};

Section build_section(const Surface& piece, const VertexOrbits& orbits,
                      const std::vector<PathSegment>& rotated_path) {
    Section sec;
    sec.total = 0;
    for (const PathSegment& seg : rotated_path) {
        PathSegment back{seg.poly, rot_ccw_inv(seg.from), rot_ccw_inv(seg.to), seg.along_edge};
        sec.offset.push_back(sec.total);
        sec.total += back.to.x - back.from.x;
        sec.segs.push_back(back);
    }
    for (size_t k = 0; k < sec.segs.size(); ++k) {
        int v = find_vertex(piece, sec.segs[k].poly, sec.segs[k].from);
        if (v >= 0) sec.vertex_param.emplace(orbits.orbit_of[sec.segs[k].poly][v], sec.offset[k]);
    }
    return sec;
}

struct Crossing {
    QuadExt param;
    QuadExt height;  // vertical distance traveled up to the crossing
};

// First intersection of a traced vertical path with the section.  The path
// is in travel order; `downward` selects the direction.  Candidates cover
// segment interiors, circle junction points lying on the path, path
// junction points lying inside circle segments, and circle points at
// passed-through vertices.  The path's very first point is never counted.
std::optional<Crossing> first_crossing(const Section& sec, const Surface& piece,
                                       const VertexOrbits& orbits,
                                       const std::vector<PathSegment>& path, bool downward) {
    QuadExt accum = 0;
    for (size_t i = 0; i < path.size(); ++i) {
        const PathSegment& seg = path[i];
        const QuadExt x = seg.from.x;
        QuadExt lo = downward ? seg.to.y : seg.from.y;
        QuadExt hi = downward ? seg.from.y : seg.to.y;
        bool have = false;
        QuadExt best_y, best_param;
        auto offer = [&](const QuadExt& cy, const QuadExt& param) {
            if (i == 0 && cy == seg.from.y) return;  // the launch point itself
            if (!have || (downward ? cy > best_y : cy < best_y)) {
                have = true;
                best_y = cy;
                best_param = param;
            }
        };
        for (size_t k = 0; k < sec.segs.size(); ++k) {
            const PathSegment& cs = sec.segs[k];
            if (cs.poly != seg.poly) continue;
            const QuadExt& cy = cs.from.y;
            if (cy < lo || cy > hi) continue;
            QuadExt len = cs.to.x - cs.from.x;
            if (x > cs.from.x && x < cs.to.x) {
                // interior of the circle segment: transversal crossing, or a
                // path junction sitting on a circle seam run
                if ((cy > lo && cy < hi) || cy == seg.from.y || cy == seg.to.y)
                    offer(cy, sec.offset[k] + (x - cs.from.x));
            } else if (x == cs.from.x) {
                offer(cy, sec.offset[k]);
            } else if (x == cs.to.x) {
                QuadExt t = sec.offset[k] + len;
                if (t == sec.total) t = 0;
                offer(cy, t);
            }
        }
        // circle point at a vertex the path runs into
        int v = find_vertex(piece, seg.poly, seg.to);
        if (v >= 0) {
            auto it = sec.vertex_param.find(orbits.orbit_of[seg.poly][v]);
            if (it != sec.vertex_param.end()) offer(seg.to.y, it->second);
        }
        if (have) {
            QuadExt h = downward ? seg.from.y - best_y : best_y - seg.from.y;
            return Crossing{best_param, accum + h};
        }
        accum += downward ? seg.from.y - seg.to.y : seg.to.y - seg.from.y;
    }
    return std::nullopt;
}

std::vector<PathSegment> map_back(const std::vector<PathSegment>& path, Vec2 (*inv)(const Vec2&)) {
    std::vector<PathSegment> out;
    out.reserve(path.size());
    for (const PathSegment& seg : path)
        out.push_back({seg.poly, inv(seg.from), inv(seg.to), seg.along_edge});
    return out;
}

}  // namespace

CrossCircleReport verify_cross_circle(const Surface& piece, const CrossCircleCertificate& cert,
                                      const QuadExt& bound) {
    CrossCircleReport rep;
    if (cert.poly < 0 || cert.poly >= piece.poly_count())
        throw CertificateError("certificate polygon out of range");
    if (!point_in_polygon(piece.polys[cert.poly], cert.point))
        throw CertificateError("certificate point is not interior");
    if (!is_connected(piece)) throw CertificateError("certificate on a disconnected surface");

    VertexOrbits orbits = compute_orbits(piece);

    // Trace the horizontal circle through the certificate point; horizontal
    // motion is vertical motion of the quarter-rotated copy.
    Surface r1 = transformed(piece, rot_ccw);
    TraceResult circle = trace_leaf(r1, cert.poly, rot_ccw(cert.point), bound);
    if (circle.stop == TraceStop::Exceeded)
        throw CertificateError("cross circle did not close within the bound");
    if (circle.stop != TraceStop::Closed) return rep;  // hit a singular point: inconclusive

    Section sec = build_section(piece, orbits, circle.path);
    if (!(sec.total == circle.length) || sec.total.sign() <= 0)
        throw CertificateError("cross circle has inconsistent length");
    rep.circumference = sec.total;

    // Discontinuities of the first-return map: first circle crossings of
    // the downward separatrices from cone, marked, and boundary vertices.
    Surface r2 = transformed(piece, rot_180);
    VertexOrbits orbits2 = compute_orbits(r2);
    std::vector<QuadExt> cuts;
    for (int o = 0; o < orbits2.count(); ++o) {
        if (!is_augmented(orbits2, o)) continue;
        for (const UpRay& ray : upward_rays(r2, orbits2, o)) {
            TraceResult r = trace_separatrix(r2, ray, bound);
            auto hit = first_crossing(sec, piece, orbits, map_back(r.path, rot_180), true);
            if (hit) {
                cuts.push_back(hit->param);
            } else if (r.stop == TraceStop::Exceeded) {
                throw CertificateError("separatrix exceeded the bound before crossing the section");
            }
            // absorbed by another marked/singular point, or left through the
            // boundary: contributes no discontinuity
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    rep.breakpoints = static_cast<int>(cuts.size());

    const QuadExt C = sec.total;
    struct Interval {
        QuadExt start, len;
    };
    std::vector<Interval> intervals;
    if (cuts.empty()) {
        intervals.push_back({QuadExt(0), C});
    } else {
        for (size_t j = 0; j < cuts.size(); ++j) {
            QuadExt end = j + 1 < cuts.size() ? cuts[j + 1] : cuts[0] + C;
            intervals.push_back({cuts[j], end - cuts[j]});
        }
    }

    bool have_shift = false;
    QuadExt shift;
    QuadExt covered = 0;
    for (const Interval& iv : intervals) {
        if (iv.len.sign() <= 0) throw CertificateError("empty return interval");
        QuadExt tm = iv.start + iv.len / QuadExt(2);
        if (tm >= C) tm -= C;
        auto [poly, pt] = sec.point_at(tm);
        if (find_vertex(piece, poly, pt) >= 0)
            throw CertificateError("return sample landed on a vertex");
        TraceResult up = trace_leaf(piece, poly, pt, bound);
        auto hit = first_crossing(sec, piece, orbits, up.path, false);
        QuadExt ret_param, ret_height;
        if (hit) {
            ret_param = hit->param;
            ret_height = hit->height;
        } else if (up.stop == TraceStop::Closed) {
            ret_param = tm;  // closed without meeting the circle elsewhere
            ret_height = up.length;
        } else if (up.stop == TraceStop::LeftBoundary) {
            return rep;  // flow leaves the surface: no return map
        } else {
            throw CertificateError("interval return never came back to the section");
        }
        QuadExt d = ret_param - tm;
        if (d.sign() < 0) d += C;
        if (!have_shift) {
            shift = d;
            have_shift = true;
        } else if (!(d == shift)) {
            return rep;  // returns disagree: not a rotation over this circle
        }
        covered += iv.len * ret_height;
    }

    rep.conclusive = true;
    QuadExt piece_area = area(piece);
    if (covered == piece_area) {
        rep.full_section = true;
    } else if (covered > piece_area) {
        throw CertificateError("flow boxes overflow the surface area");
    }
    rep.rotation = shift / C;
    rep.rotation_rational = rep.rotation.is_rational();
    return rep;
}

PieceClassification classify_piece(const Surface& piece, const QuadExt& bound) {
    for (const auto& cert : piece.certificates) {
        CrossCircleReport rep;
        try {
            rep = verify_cross_circle(piece, cert, bound);
        } catch (const CertificateError&) {
            continue;
        }
        if (!rep.conclusive || !rep.full_section) continue;
        PieceClassification cls;
        if (rep.rotation_rational) {
            cls.kind = PieceKind::Periodic;
            cls.circumference = rep.circumference;
            cls.width = area(piece) / rep.circumference;
        } else {
            cls.kind = PieceKind::MinimalCertified;
            cls.rotation = rep.rotation;
        }
        return cls;
    }

    VertexOrbits orbits = compute_orbits(piece);
    bool interior_singularity = false;
    for (int o = 0; o < orbits.count(); ++o)
        if (!orbits.on_boundary[o] && (orbits.angle_units[o] > 1 || orbits.marked[o]))
            interior_singularity = true;

    if (!interior_singularity) {
        for (int e = 0; e < piece.edge_count(); ++e) {
            if (piece.glue[e] == Surface::BOUNDARY || piece.glue[e] < e) continue;
            auto [p, l] = piece.edge_of(e);
            Vec2 v = piece.edge_vec(p, l);
            if (v.x.is_zero()) continue;
            Vec2 mid = QuadExt(Rat(1, 2)) * (piece.edge_tail(p, l) + piece.edge_head(p, l));
            TraceResult r = trace_leaf(piece, p, mid, bound);
            if (r.stop == TraceStop::Closed) {
                PieceClassification cls;
                cls.kind = PieceKind::Periodic;
                cls.circumference = r.length;
                cls.width = area(piece) / r.length;
                return cls;
            }
            if (r.stop == TraceStop::Exceeded) break;  // wanders: not a cylinder
            // singular leaf: try another edge
        }
    }

    PieceClassification cls;
    cls.kind = PieceKind::MinimalHeuristic;
    cls.bound = bound;
    return cls;
}

DecomposeResult decompose_vertical(const Surface& s) {
    return decompose_vertical(s, default_trace_bound(s));
}

DecomposeResult decompose_vertical(const Surface& s, const QuadExt& bound) {
    require_valid(s);
    if (!is_closed(s)) throw DomainError("decomposition requires a closed surface");
    DecomposeResult out;
    FlowScan scan = find_vertical_saddle_connections(s, bound);
    out.connections = std::move(scan.connections);
    out.exceeded_rays = scan.exceeded_rays;
    Surface cut = cut_along(s, out.connections);
    out.pieces = connected_pieces(cut);
    for (const Surface& piece : out.pieces) {
        out.kinds.push_back(classify_piece(piece, bound));
        if (out.kinds.back().kind == PieceKind::Periodic)
            ++out.periodic_count;
        else
            ++out.minimal_count;
    }
    return out;
}

}  // namespace hypsurf
