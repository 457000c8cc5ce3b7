#pragma once

#include <vector>

#include "hypsurf/quad_ext.hpp"

namespace hypsurf {

struct Vec2 {
    QuadExt x;
    QuadExt y;

    Vec2() = default;
    Vec2(QuadExt x_, QuadExt y_) : x(std::move(x_)), y(std::move(y_)) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    friend Vec2 operator*(const QuadExt& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

inline QuadExt cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline QuadExt dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

// Row-major 2x2 matrix acting on column vectors.
struct Mat2 {
    QuadExt a, b, c, d;

    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    QuadExt det() const { return a * d - b * c; }

    // (x, y) -> (x, sx + y)
    static Mat2 vertical_shear(const QuadExt& s) { return {1, 0, s, 1}; }
    // (x, y) -> (x + sy, y)
    static Mat2 horizontal_shear(const QuadExt& s) { return {1, s, 0, 1}; }
};

// True if the two directions are nonzero positive multiples of each other.
bool same_direction(const Vec2& u, const Vec2& v);

// Direction v strictly inside the sector swept CCW from lo to hi.  The sweep
// angle is taken in (0, 2pi); parallel lo, hi of equal sense give the empty
// sector, opposite sense the open half-plane left of lo.
bool strictly_inside_ccw(const Vec2& lo, const Vec2& hi, const Vec2& v);

// Half-open variant [lo, hi): includes v parallel to lo, excludes parallel to
// hi.  Summed over the corners around an interior point, a fixed reference
// direction is counted once per full turn, giving cone angles exactly.
bool in_half_open_ccw(const Vec2& lo, const Vec2& hi, const Vec2& v);

// Twice the signed area (positive for CCW).
QuadExt polygon_area2(const std::vector<Vec2>& poly);

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p);

// Strict interior test via half-open crossing parity; boundary points are out.
bool point_in_polygon(const std::vector<Vec2>& poly, const Vec2& p);

// Open segments share a point, or one contains an endpoint of the other in
// its interior.  Shared endpoints alone do not count.
bool segments_overlap_improperly(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

// Edges may touch only at shared polygon vertices.
bool polygon_is_simple(const std::vector<Vec2>& poly);

}  // namespace hypsurf
