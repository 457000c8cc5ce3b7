#include <doctest.h>

#include <algorithm>

#include "hypsurf/assembler.hpp"
#include "hypsurf/blocks.hpp"
#include "hypsurf/dissect.hpp"
#include "hypsurf/errors.hpp"

using hypsurf::Diagram;
using hypsurf::QuadExt;
using hypsurf::Rat;
using hypsurf::VertexKind;

namespace {
const QuadExt kSqrt2{Rat(0), Rat(1), 2};
}

TEST_CASE("one block dissects into itself") {
    auto b = hypsurf::construct_P(3);
    auto dec = hypsurf::decompose_vertical(b.surface);
    auto dis = hypsurf::dissect(b.surface, b.involution, dec);
    REQUIRE(dis.pieces.size() == 1);
    CHECK(dis.slit_pairs.empty());
    CHECK(hypsurf::is_closed(dis.pieces[0]));
    CHECK(hypsurf::genus(dis.pieces[0]) == 2);
    CHECK(hypsurf::quotient_genus(dis.pieces[0], dis.involutions[0]) == 0);

    Diagram dg = hypsurf::extract_diagram(b.surface, b.involution, dec);
    REQUIRE(hypsurf::validate_diagram(dg).ok);
    CHECK(dg.vertices.size() == 1);
    CHECK(dg.vertices[0].kind == VertexKind::Periodic);
    CHECK(dg.half_edge_count() == 3);
    CHECK(hypsurf::dotted_count(dg, dg.vertices[0].id) == 0);
    CHECK(hypsurf::predicted_genus(dg) == hypsurf::genus(b.surface));
}

TEST_CASE("dotted block reads back as one minimal vertex") {
    auto b = hypsurf::construct_M(3, kSqrt2);
    auto dec = hypsurf::decompose_vertical(b.surface);
    Diagram dg = hypsurf::extract_diagram(b.surface, b.involution, dec);
    REQUIRE(hypsurf::validate_diagram(dg).ok);
    CHECK(dg.vertices.size() == 1);
    CHECK(dg.vertices[0].kind == VertexKind::Minimal);
    CHECK(dg.half_edge_count() == 3);
    CHECK(hypsurf::dotted_count(dg, dg.vertices[0].id) == 1);
    CHECK(hypsurf::predicted_stratum(dg).orders == std::vector<int>{2});
}

TEST_CASE("two-cylinder assembly splits along one slit") {
    auto dg = hypsurf::build_p_central(4, 2, 0);
    auto real = hypsurf::realize_diagram(dg, kSqrt2);
    auto dec = hypsurf::decompose_vertical(real.net);
    REQUIRE(dec.pieces.size() == 2);
    auto dis = hypsurf::dissect(real.net, real.involution, dec);
    REQUIRE(dis.pieces.size() == 2);
    REQUIRE(dis.slit_pairs.size() == 1);
    CHECK(dis.slit_pairs[0].piece_a != dis.slit_pairs[0].piece_b);

    // healed pieces are the blocks again, up to re-closing
    std::vector<int> genera;
    for (size_t i = 0; i < dis.pieces.size(); ++i) {
        CHECK(hypsurf::is_closed(dis.pieces[i]));
        CHECK(hypsurf::quotient_genus(dis.pieces[i], dis.involutions[i]) == 0);
        genera.push_back(hypsurf::genus(dis.pieces[i]));
    }
    std::sort(genera.begin(), genera.end());
    CHECK(genera == std::vector<int>{1, 2});  // a square block and a 3-block

    auto out = hypsurf::extract_diagram(real.net, real.involution, dec);
    CHECK(hypsurf::isomorphic(out, dg));
}

TEST_CASE("two minimal components share a slit and stay minimal") {
    auto dg = hypsurf::build_m_central(4, 0, 2);
    auto real = hypsurf::realize_diagram(dg, kSqrt2);
    auto dec = hypsurf::decompose_vertical(real.net);
    REQUIRE(dec.pieces.size() == 2);
    CHECK(dec.minimal_count == 2);
    auto dis = hypsurf::dissect(real.net, real.involution, dec);
    REQUIRE(dis.pieces.size() == 2);
    CHECK(dis.slit_pairs.size() == 1);
    for (size_t i = 0; i < dis.pieces.size(); ++i) {
        CHECK(hypsurf::genus(dis.pieces[i]) == 1);
        CHECK(hypsurf::quotient_genus(dis.pieces[i], dis.involutions[i]) == 0);
    }
    CHECK(hypsurf::isomorphic(hypsurf::extract_diagram(real.net, real.involution, dec), dg));
}

TEST_CASE("augmented orbits cover every healed cone and mark") {
    auto dg = hypsurf::build_p_central(5, 1, 1);
    auto real = hypsurf::realize_diagram(dg, kSqrt2);
    auto dec = hypsurf::decompose_vertical(real.net);
    auto dis = hypsurf::dissect(real.net, real.involution, dec);
    REQUIRE(dis.pieces.size() == dis.augmented_orbits.size());
    for (size_t i = 0; i < dis.pieces.size(); ++i) {
        auto orb = hypsurf::compute_orbits(dis.pieces[i]);
        for (int o : dis.augmented_orbits[i]) {
            bool cone = orb.angle_units[o] > 1;
            bool marked = orb.marked[o];
            CHECK((cone || marked));
        }
    }
}

TEST_CASE("dissection rejects a broken involution") {
    auto b = hypsurf::construct_P(3);
    auto dec = hypsurf::decompose_vertical(b.surface);
    auto inv = b.involution;
    inv.centers[0] = inv.centers[0] + hypsurf::Vec2{QuadExt(Rat(1, 3)), QuadExt(0)};
    CHECK_THROWS_AS(hypsurf::dissect(b.surface, inv, dec), hypsurf::InvolutionError);
}
