#include <doctest.h>

#include "hypsurf/assembler.hpp"
#include "hypsurf/errors.hpp"
#include "hypsurf/flow.hpp"

using hypsurf::Diagram;
using hypsurf::HalfEdgeStyle;
using hypsurf::QuadExt;
using hypsurf::Rat;
using hypsurf::VertexKind;

namespace {
const QuadExt kSqrt2{Rat(0), Rat(1), 2};
}

TEST_CASE("flagship assemblies hit the advertised strata and counts") {
    struct Case {
        Diagram dg;
        int p, m, genus;
        std::vector<int> stratum;
    };
    std::vector<Case> cases;
    cases.push_back({hypsurf::build_p_central(4, 2, 0), 2, 0, 2, {1, 1}});
    cases.push_back({hypsurf::build_m_central(3, 0, 1), 0, 1, 2, {2}});
    cases.push_back({hypsurf::build_p_central(5, 1, 1), 1, 1, 3, {4}});
    cases.push_back({hypsurf::build_p_central(6, 2, 1), 2, 1, 3, {2, 2}});
    for (auto& c : cases) {
        CAPTURE(c.p);
        CAPTURE(c.m);
        auto real = hypsurf::realize_diagram(c.dg, kSqrt2);
        CHECK(hypsurf::genus(real.net) == c.genus);
        CHECK(hypsurf::stratum_signature(real.net) == c.stratum);
        auto rep = hypsurf::verify_realization(c.dg, real.net, real.involution, c.p, c.m);
        std::string first_error = rep.errors.empty() ? "" : rep.errors.front();
        CAPTURE(first_error);
        CHECK(rep.ok);
        CHECK(rep.diagram_isomorphic);
        CHECK(rep.fixed_points == 2 * c.genus + 2);
    }
}

TEST_CASE("assembly bookkeeping: provenance, marks, connection count") {
    auto dg = hypsurf::build_p_central(4, 2, 0);
    auto real = hypsurf::realize_diagram(dg, kSqrt2);
    REQUIRE(real.vertex_blocks.size() == 2);
    CHECK(real.provenance.size() == static_cast<size_t>(real.net.poly_count()));
    for (int vtx : real.provenance) {
        CHECK(vtx >= 0);
        CHECK(vtx < 2);
    }
    CHECK(real.net.marks.empty());  // every 2pi orbit was consumed by the slits

    // saddle connections of the assembly = all seams of both blocks
    auto dec = hypsurf::decompose_vertical(real.net);
    CHECK(dec.connections.size() == 4);  // 3 + 1
    CHECK(dec.exceeded_rays == 0);

    auto mm = hypsurf::realize_diagram(hypsurf::build_m_central(4, 0, 2), kSqrt2);
    auto mdec = hypsurf::decompose_vertical(mm.net);
    CHECK(mdec.connections.size() == 2);  // one seam per dotted block
    CHECK(mdec.exceeded_rays == 2);       // one wandering separatrix per minimal piece
}

TEST_CASE("small assemblies keep their marked points") {
    auto one = hypsurf::realize_diagram(hypsurf::build_p_central(1, 1, 0), kSqrt2);
    CHECK(hypsurf::genus(one.net) == 1);
    CHECK(one.net.marks.size() == 1);

    auto two = hypsurf::realize_diagram(hypsurf::build_p_central(2, 1, 0), kSqrt2);
    CHECK(hypsurf::genus(two.net) == 1);
    CHECK(two.net.marks.size() == 2);

    auto pair = hypsurf::realize_diagram(hypsurf::build_p_central(2, 2, 0), kSqrt2);
    CHECK(hypsurf::genus(pair.net) == 1);
    CHECK(pair.net.marks.size() == 2);
    auto rep = hypsurf::verify_realization(hypsurf::build_p_central(2, 2, 0), pair.net,
                                           pair.involution, 2, 0);
    CHECK(rep.ok);
}

TEST_CASE("diagrams the assembler must refuse") {
    SUBCASE("degree-1 minimal vertex") {
        auto dg = hypsurf::build_m_central(1, 0, 1);
        CHECK_THROWS_AS(hypsurf::realize_diagram(dg, kSqrt2), hypsurf::DiagramError);
    }
    SUBCASE("two dotted half-edges on one vertex") {
        Diagram dg;
        dg.vertices = {{0, VertexKind::Minimal}};
        dg.half_edges = {{0, HalfEdgeStyle::Dotted}, {0, HalfEdgeStyle::Dotted}, {0, HalfEdgeStyle::Solid}};
        REQUIRE(hypsurf::validate_diagram(dg).ok);
        CHECK_THROWS_AS(hypsurf::realize_diagram(dg, kSqrt2), hypsurf::DiagramError);
    }
    SUBCASE("dotted half-edge on a periodic vertex") {
        Diagram dg;
        dg.vertices = {{0, VertexKind::Periodic}};
        dg.half_edges = {{0, HalfEdgeStyle::Dotted}, {0, HalfEdgeStyle::Solid}, {0, HalfEdgeStyle::Solid}};
        REQUIRE(hypsurf::validate_diagram(dg).ok);
        CHECK_THROWS_AS(hypsurf::realize_diagram(dg, kSqrt2), hypsurf::DiagramError);
    }
    SUBCASE("rational twist with a dotted vertex present") {
        auto dg = hypsurf::build_m_central(3, 0, 1);
        CHECK_THROWS_AS(hypsurf::realize_diagram(dg, QuadExt(Rat(3, 2))), hypsurf::BlockError);
    }
}

TEST_CASE("verification catches tampering and wrong expectations") {
    auto dg = hypsurf::build_p_central(4, 2, 0);
    auto real = hypsurf::realize_diagram(dg, kSqrt2);

    SUBCASE("unglued edge") {
        auto s = real.net;
        int e = 0;
        int f = s.glue[e];
        s.glue[e] = hypsurf::Surface::BOUNDARY;
        s.glue[f] = hypsurf::Surface::BOUNDARY;
        CHECK_FALSE(hypsurf::verify_realization(dg, s, real.involution, 2, 0).ok);
    }
    SUBCASE("wrong component counts") {
        CHECK_FALSE(hypsurf::verify_realization(dg, real.net, real.involution, 1, 1).ok);
        CHECK_FALSE(hypsurf::verify_realization(dg, real.net, real.involution, 3, 0).ok);
    }
    SUBCASE("wrong diagram") {
        auto other = hypsurf::build_p_central(4, 1, 1);
        auto rep = hypsurf::verify_realization(other, real.net, real.involution, 2, 0);
        CHECK_FALSE(rep.ok);
    }
}
