#include "hypsurf/geom.hpp"

#include "hypsurf/errors.hpp"

namespace hypsurf {

namespace {

int side(const Vec2& a, const Vec2& b, const Vec2& p) {
    return cross(b - a, p - a).sign();
}

void require_nonzero(const Vec2& v) {
    if (v.is_zero()) throw DomainError("zero direction vector");
}

bool segments_intersect_closed(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    int o1 = side(a, b, c);
    int o2 = side(a, b, d);
    int o3 = side(c, d, a);
    int o4 = side(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

bool same_direction(const Vec2& u, const Vec2& v) {
    require_nonzero(u);
    require_nonzero(v);
    return cross(u, v).is_zero() && dot(u, v).sign() > 0;
}

bool strictly_inside_ccw(const Vec2& lo, const Vec2& hi, const Vec2& v) {
    require_nonzero(lo);
    require_nonzero(hi);
    require_nonzero(v);
    int s = cross(lo, hi).sign();
    if (s > 0) return cross(lo, v).sign() > 0 && cross(v, hi).sign() > 0;
    if (s < 0) return cross(lo, v).sign() > 0 || cross(v, hi).sign() > 0;
    if (dot(lo, hi).sign() > 0) return false;
    return cross(lo, v).sign() > 0;
}

bool in_half_open_ccw(const Vec2& lo, const Vec2& hi, const Vec2& v) {
    if (same_direction(v, lo)) return true;
    if (same_direction(v, hi)) return false;
    return strictly_inside_ccw(lo, hi, v);
}

QuadExt polygon_area2(const std::vector<Vec2>& poly) {
    QuadExt acc = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) acc += cross(poly[i], poly[(i + 1) % n]);
    return acc;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
    if (!cross(b - a, p - a).is_zero()) return false;
    return dot(p - a, p - b).sign() <= 0;
}

bool point_in_polygon(const std::vector<Vec2>& poly, const Vec2& p) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i)
        if (on_segment(poly[i], poly[(i + 1) % n], p)) return false;
    // Half-open crossing parity for a leftward horizontal ray.
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        int ya = (a.y - p.y).sign();
        int yb = (b.y - p.y).sign();
        if (yb > 0 && ya <= 0) {  // upward edge spans p.y in [a.y, b.y)
            if (cross(b - a, p - a).sign() > 0) inside = !inside;
        } else if (ya > 0 && yb <= 0) {  // downward edge
            if (cross(b - a, p - a).sign() < 0) inside = !inside;
        }
    }
    return inside;
}

bool segments_overlap_improperly(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    if (!segments_intersect_closed(a, b, c, d)) return false;
    // Shared endpoints are fine as long as nothing else touches.
    bool share_ac = a == c, share_ad = a == d, share_bc = b == c, share_bd = b == d;
    int shared = int(share_ac) + int(share_ad) + int(share_bc) + int(share_bd);
    if (shared == 0) return true;
    if (shared > 1) return true;  // identical or reversed segments
    // With one shared endpoint, reject if either other endpoint lies on the
    // opposite segment (covers collinear overlap past the joint).
    const Vec2& a_other = (share_ac || share_ad) ? b : a;
    const Vec2& c_other = (share_ac || share_bc) ? d : c;
    if (on_segment(c, d, a_other)) return true;
    if (on_segment(a, b, c_other)) return true;
    return false;
}

bool polygon_is_simple(const std::vector<Vec2>& poly) {
    size_t n = poly.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Vec2& a = poly[i];
            const Vec2& b = poly[(i + 1) % n];
            const Vec2& c = poly[j];
            const Vec2& d = poly[(j + 1) % n];
            if (adjacent) {
                if (segments_overlap_improperly(a, b, c, d)) return false;
            } else {
                if (segments_intersect_closed(a, b, c, d)) return false;
            }
        }
    }
    return true;
}

}  // namespace hypsurf
