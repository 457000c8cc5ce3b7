#include <doctest.h>

#include <json.hpp>
#include <string>

#include "hypsurf/assembler.hpp"
#include "hypsurf/blocks.hpp"
#include "hypsurf/errors.hpp"
#include "hypsurf/json_io.hpp"
#include "hypsurf/svg.hpp"

using hypsurf::QuadExt;
using hypsurf::Rat;
using hypsurf::Surface;
using nlohmann::json;

namespace {
const QuadExt kSqrt2{Rat(0), Rat(1), 2};

void check_surface_roundtrip(const Surface& s) {
    json j = hypsurf::surface_to_json(s);
    Surface back = hypsurf::surface_from_json(j);
    CHECK(hypsurf::surface_to_json(back).dump() == j.dump());
    CHECK(back.field_d == s.field_d);
    CHECK(back.polys == s.polys);
    CHECK(back.glue == s.glue);
    CHECK(back.marks == s.marks);
}

}  // namespace

TEST_CASE("coordinate serialization round-trips exactly") {
    QuadExt q{Rat(-7, 3), Rat(22, 5), 7};
    json j = hypsurf::quad_to_json(q);
    CHECK(j["a"] == "-7/3");
    CHECK(j["b"] == "22/5");
    CHECK(j["d"] == 7);
    CHECK(hypsurf::quad_from_json(j) == q);

    CHECK_THROWS_AS(hypsurf::quad_from_json(json{{"a", "1/1"}, {"b", "1/1"}, {"d", 4}}),
                    hypsurf::ParseError);
    CHECK_THROWS_AS(hypsurf::quad_from_json(json{{"a", "blah"}, {"b", "0/1"}, {"d", 2}}),
                    hypsurf::ParseError);
    CHECK_THROWS_AS(hypsurf::quad_from_json(json::array()), hypsurf::ParseError);
}

TEST_CASE("surfaces, involutions, and diagrams round-trip") {
    for (int n : {1, 2, 3, 4}) {
        auto b = hypsurf::construct_P(n);
        check_surface_roundtrip(b.surface);
        json ji = hypsurf::involution_to_json(b.involution);
        auto inv = hypsurf::involution_from_json(ji);
        CHECK(hypsurf::involution_to_json(inv).dump() == ji.dump());
    }
    check_surface_roundtrip(hypsurf::construct_M(3, kSqrt2).surface);  // carries a certificate

    auto real = hypsurf::realize_diagram(hypsurf::build_p_central(5, 1, 1), kSqrt2);
    check_surface_roundtrip(real.net);

    for (const auto& dg :
         {hypsurf::build_p_central(4, 2, 0), hypsurf::build_m_central(6, 1, 2)}) {
        json j = hypsurf::diagram_to_json(dg);
        auto back = hypsurf::diagram_from_json(j);
        CHECK(hypsurf::diagram_to_json(back).dump() == j.dump());
        CHECK(hypsurf::isomorphic(back, dg));
    }
}

TEST_CASE("surface parsing rejects structural garbage") {
    auto b = hypsurf::construct_P(2);
    json good = hypsurf::surface_to_json(b.surface);

    SUBCASE("gluing index out of range") {
        json j = good;
        j["gluings"][0][1] = 99;
        CHECK_THROWS_AS(hypsurf::surface_from_json(j), hypsurf::ParseError);
    }
    SUBCASE("edge glued twice") {
        json j = good;
        j["gluings"].push_back(j["gluings"][0]);
        CHECK_THROWS_AS(hypsurf::surface_from_json(j), hypsurf::ParseError);
    }
    SUBCASE("polygon with fewer than three vertices") {
        json j = good;
        j["polygons"][0] = json::array({j["polygons"][0][0], j["polygons"][0][1]});
        CHECK_THROWS_AS(hypsurf::surface_from_json(j), hypsurf::Error);
    }
    SUBCASE("mark on a missing polygon") {
        json j = good;
        j["marks"].push_back({{"poly", 9}, {"vertex", 0}});
        CHECK_THROWS_AS(hypsurf::surface_from_json(j), hypsurf::Error);
    }
    SUBCASE("not an object") {
        CHECK_THROWS_AS(hypsurf::surface_from_json(json(3)), hypsurf::ParseError);
    }
}

TEST_CASE("svg rendering is deterministic and self-consistent") {
    auto b = hypsurf::construct_M(2, kSqrt2);
    std::string once = hypsurf::render_surface_svg(b.surface, &b.involution);
    std::string twice = hypsurf::render_surface_svg(b.surface, &b.involution);
    CHECK(once == twice);
    CHECK(once.rfind("<svg", 0) == 0);
    CHECK(once.find("</svg>") != std::string::npos);
    CHECK(once.find("<polygon") != std::string::npos);
    CHECK(once.find("NaN") == std::string::npos);

    auto dg = hypsurf::build_p_central(6, 2, 1);
    std::string d1 = hypsurf::render_diagram_svg(dg);
    CHECK(d1 == hypsurf::render_diagram_svg(dg));
    CHECK(d1.find("stroke-dasharray") != std::string::npos);  // the dotted half-edge
    CHECK(d1.find("<circle") != std::string::npos);
}
