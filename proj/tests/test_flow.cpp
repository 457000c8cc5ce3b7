#include <doctest.h>

#include "hypsurf/blocks.hpp"
#include "hypsurf/errors.hpp"
#include "hypsurf/flow.hpp"

using hypsurf::PieceKind;
using hypsurf::QuadExt;
using hypsurf::Rat;
using hypsurf::Surface;
using hypsurf::TraceStop;
using hypsurf::Vec2;

namespace {

const QuadExt kSqrt2{Rat(0), Rat(1), 2};

Vec2 v(int x, int y) { return Vec2{QuadExt(x), QuadExt(y)}; }

Surface square_torus() {
    Surface s;
    s.polys = {{v(0, 0), v(1, 0), v(1, 1), v(0, 1)}};
    s.glue = {2, 3, 0, 1};
    return s;
}

Surface marked_hexagon_torus() {
    Surface s;
    s.polys = {{v(0, 0), v(1, 0), v(2, 1), v(2, 2), v(1, 2), v(0, 1)}};
    s.glue = {3, 4, 5, 0, 1, 2};
    s.marks = {{0, 0}, {0, 1}};  // one per vertex class
    return s;
}

Surface sheared_marked_torus(const QuadExt& alpha) {
    Surface s;
    s.field_d = alpha.d();
    Vec2 one{QuadExt(1), QuadExt(0)};
    Vec2 tau{alpha, QuadExt(1)};
    s.polys = {{v(0, 0), one, one + tau, tau}};
    s.glue = {2, 3, 0, 1};
    s.marks = {{0, 0}};
    return s;
}

}  // namespace

TEST_CASE("trace bound default is proportional to total edge length") {
    CHECK(hypsurf::default_trace_bound(square_torus()) == QuadExt(400));
}

TEST_CASE("vertical leaf on the square torus closes with period one") {
    Surface s = square_torus();
    auto res = hypsurf::trace_leaf(s, 0, Vec2{QuadExt(Rat(1, 2)), QuadExt(Rat(1, 4))},
                                   hypsurf::default_trace_bound(s));
    CHECK(res.stop == TraceStop::Closed);
    CHECK(res.length == QuadExt(1));
    CHECK(res.path.size() == 2);
}

TEST_CASE("leaf traces cannot start at a vertex") {
    Surface s = square_torus();
    CHECK_THROWS_AS(hypsurf::trace_leaf(s, 0, v(0, 0), QuadExt(10)), hypsurf::DomainError);
}

TEST_CASE("irrational shear makes every leaf wander") {
    Surface s = sheared_marked_torus(kSqrt2);
    auto res = hypsurf::trace_leaf(s, 0, Vec2{QuadExt(1), QuadExt(Rat(1, 2))}, QuadExt(10));
    CHECK(res.stop == TraceStop::Exceeded);
}

TEST_CASE("upward germ count equals cone angle") {
    Surface torus = square_torus();
    auto orb = hypsurf::compute_orbits(torus);
    REQUIRE(orb.count() == 1);
    CHECK(hypsurf::upward_rays(torus, orb, 0).size() == 1);

    auto p3 = hypsurf::construct_P(3).surface;
    auto orb3 = hypsurf::compute_orbits(p3);
    REQUIRE(orb3.count() == 1);
    CHECK(hypsurf::upward_rays(p3, orb3, 0).size() == 3);
}

TEST_CASE("separatrix from the square block mark runs up the seam") {
    auto b = hypsurf::construct_P(1);
    auto orb = hypsurf::compute_orbits(b.surface);
    auto rays = hypsurf::upward_rays(b.surface, orb, 0);
    REQUIRE(rays.size() == 1);
    auto res = hypsurf::trace_separatrix(b.surface, rays[0], QuadExt(100));
    CHECK(res.stop == TraceStop::HitOrbit);
    CHECK(res.orbit == 0);
    CHECK(res.length == QuadExt(1));
    REQUIRE(res.path.size() == 1);
    CHECK(res.path[0].along_edge);
}

TEST_CASE("saddle connection scans on the block families") {
    for (int n : {1, 2, 3, 4, 5}) {
        auto b = hypsurf::construct_P(n);
        auto scan =
            hypsurf::find_vertical_saddle_connections(b.surface, hypsurf::default_trace_bound(b.surface));
        CAPTURE(n);
        CHECK(scan.connections.size() == static_cast<size_t>(n));
        CHECK(scan.exceeded_rays == 0);
        for (const auto& c : scan.connections) CHECK(c.length == QuadExt(1));
    }
    for (int n : {2, 3, 4, 5}) {
        auto b = hypsurf::construct_M(n, kSqrt2);
        auto scan =
            hypsurf::find_vertical_saddle_connections(b.surface, hypsurf::default_trace_bound(b.surface));
        CAPTURE(n);
        CHECK(scan.connections.size() == static_cast<size_t>(n - 1));
        CHECK(scan.exceeded_rays == 1);
    }
}

TEST_CASE("solid blocks decompose into a single certified cylinder") {
    for (int n : {1, 3, 4}) {
        auto b = hypsurf::construct_P(n);
        auto dec = hypsurf::decompose_vertical(b.surface);
        CAPTURE(n);
        REQUIRE(dec.pieces.size() == 1);
        CHECK(dec.periodic_count == 1);
        CHECK(dec.minimal_count == 0);
        CHECK(dec.kinds[0].kind == PieceKind::Periodic);
        CHECK(dec.kinds[0].circumference == QuadExt(n));
        CHECK(dec.kinds[0].width == QuadExt(1));
        CHECK(hypsurf::area(dec.pieces[0]) == QuadExt(n));  // slits preserve area
    }
}

TEST_CASE("dotted blocks decompose into a single certified minimal piece") {
    auto b = hypsurf::construct_M(2, kSqrt2);
    auto dec = hypsurf::decompose_vertical(b.surface);
    REQUIRE(dec.pieces.size() == 1);
    CHECK(dec.periodic_count == 0);
    CHECK(dec.minimal_count == 1);
    CHECK(dec.kinds[0].kind == PieceKind::MinimalCertified);
    CHECK(dec.kinds[0].rotation == QuadExt(2) - kSqrt2);
    CHECK(dec.connections.size() == 1);
    CHECK(dec.exceeded_rays == 1);
}

TEST_CASE("interior chord connections are cut by splitting polygons") {
    Surface s = marked_hexagon_torus();
    hypsurf::require_valid(s);
    auto scan = hypsurf::find_vertical_saddle_connections(s, hypsurf::default_trace_bound(s));
    REQUIRE(scan.connections.size() == 2);
    CHECK(scan.exceeded_rays == 0);
    CHECK(scan.connections[0].length == QuadExt(1));  // along the glued slanted seam
    CHECK(scan.connections[1].length == QuadExt(2));  // straight through the interior

    auto dec = hypsurf::decompose_vertical(s);
    REQUIRE(dec.pieces.size() == 1);
    CHECK(dec.periodic_count == 1);
    CHECK(dec.kinds[0].kind == PieceKind::Periodic);
    CHECK(dec.kinds[0].circumference == QuadExt(3));
    CHECK(dec.kinds[0].width == QuadExt(1));
    CHECK(hypsurf::area(dec.pieces[0]) == QuadExt(3));
}

TEST_CASE("doubling the bound does not change a complete scan") {
    auto b = hypsurf::construct_M(3, kSqrt2);
    auto base = hypsurf::decompose_vertical(b.surface);
    auto wide = hypsurf::decompose_vertical(b.surface, QuadExt(2) * hypsurf::default_trace_bound(b.surface));
    CHECK(base.periodic_count == wide.periodic_count);
    CHECK(base.minimal_count == wide.minimal_count);
    CHECK(base.connections.size() == wide.connections.size());
}

TEST_CASE("rational twist turns the dotted block periodic") {
    auto b = hypsurf::construct_M(2, QuadExt(Rat(1, 2)), false);
    auto rep = hypsurf::verify_cross_circle(b.surface, b.surface.certificates[0],
                                            hypsurf::default_trace_bound(b.surface));
    CHECK(rep.conclusive);
    CHECK(rep.full_section);
    CHECK(rep.rotation_rational);

    auto dec = hypsurf::decompose_vertical(b.surface);
    CHECK(dec.minimal_count == 0);
    CHECK(dec.exceeded_rays == 0);
    for (const auto& k : dec.kinds) CHECK(k.kind == PieceKind::Periodic);
}

TEST_CASE("certificate checks reject malformed certificates") {
    auto b = hypsurf::construct_M(2, kSqrt2);
    hypsurf::CrossCircleCertificate bad{0, v(50, 50)};
    CHECK_THROWS_AS(hypsurf::verify_cross_circle(b.surface, bad, QuadExt(100)),
                    hypsurf::CertificateError);
}
