#include "hypsurf/json_io.hpp"

#include <string>

#include "hypsurf/errors.hpp"
#include "hypsurf/rational.hpp"

namespace hypsurf {

using nlohmann::json;

json quad_to_json(const QuadExt& q) {
    return json{{"a", format_rational(q.a())},
                {"b", format_rational(q.b())},
                {"d", q.d().convert_to<long long>()}};
}

QuadExt quad_from_json(const json& j) {
    try {
        Rat a = parse_rational(j.at("a").get<std::string>());
        Rat b = parse_rational(j.at("b").get<std::string>());
        BigInt d(j.at("d").get<long long>());
        if (d < 2 || !is_square_free(d)) {
            throw ParseError("field discriminant " + d.str() + " is not square-free or < 2");
        }
        return QuadExt(a, b, d);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad number: ") + e.what());
    }
}

json vec2_to_json(const Vec2& v) {
    return json{{"x", quad_to_json(v.x)}, {"y", quad_to_json(v.y)}};
}

Vec2 vec2_from_json(const json& j) {
    try {
        return Vec2{quad_from_json(j.at("x")), quad_from_json(j.at("y"))};
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad point: ") + e.what());
    }
}

json surface_to_json(const Surface& s) {
    json j;
    j["d"] = s.field_d.convert_to<long long>();
    json polys = json::array();
    for (const auto& poly : s.polys) {
        json jp = json::array();
        for (const auto& v : poly) jp.push_back(vec2_to_json(v));
        polys.push_back(std::move(jp));
    }
    j["polygons"] = std::move(polys);
    json gluings = json::array();
    for (int e = 0; e < s.edge_count(); ++e) {
        int f = s.glue[e];
        if (f == Surface::BOUNDARY || f < e) continue;
        auto [pi, ei] = s.edge_of(e);
        auto [pj, ej] = s.edge_of(f);
        gluings.push_back(json::array({pi, ei, pj, ej}));
    }
    j["gluings"] = std::move(gluings);
    json marks = json::array();
    for (const auto& m : s.marks) marks.push_back(json{{"poly", m.poly}, {"vertex", m.vertex}});
    j["marks"] = std::move(marks);
    if (!s.certificates.empty()) {
        json certs = json::array();
        for (const auto& c : s.certificates) {
            certs.push_back(json{{"poly", c.poly}, {"point", vec2_to_json(c.point)}});
        }
        j["certificates"] = std::move(certs);
    }
    return j;
}

Surface surface_from_json(const json& j) {
    try {
        Surface s;
        long long d = j.at("d").get<long long>();
        s.field_d = BigInt(d);
        if (s.field_d < 2 || !is_square_free(s.field_d)) {
            throw ParseError("field discriminant " + s.field_d.str() + " is not square-free or < 2");
        }
        for (const auto& jp : j.at("polygons")) {
            std::vector<Vec2> poly;
            for (const auto& jv : jp) poly.push_back(vec2_from_json(jv));
            if (poly.size() < 3) throw ParseError("polygon with fewer than 3 vertices");
            s.polys.push_back(std::move(poly));
        }
        s.glue.assign(static_cast<size_t>([&] {
                          int n = 0;
                          for (const auto& p : s.polys) n += static_cast<int>(p.size());
                          return n;
                      }()),
                      Surface::BOUNDARY);
        for (const auto& g : j.at("gluings")) {
            if (!g.is_array() || g.size() != 4) throw ParseError("gluing entry is not a quadruple");
            int pi = g[0].get<int>(), ei = g[1].get<int>(), pj = g[2].get<int>(), ej = g[3].get<int>();
            if (pi < 0 || pi >= s.poly_count() || pj < 0 || pj >= s.poly_count()) {
                throw ParseError("gluing polygon index out of range");
            }
            if (ei < 0 || ei >= s.poly_size(pi) || ej < 0 || ej >= s.poly_size(pj)) {
                throw ParseError("gluing edge index out of range");
            }
            int a = s.edge_id(pi, ei), b = s.edge_id(pj, ej);
            if (s.glue[a] != Surface::BOUNDARY || s.glue[b] != Surface::BOUNDARY) {
                throw ParseError("edge glued twice");
            }
            s.glue[a] = b;
            s.glue[b] = a;
        }
        for (const auto& m : j.at("marks")) {
            int p = m.at("poly").get<int>(), v = m.at("vertex").get<int>();
            if (p < 0 || p >= s.poly_count() || v < 0 || v >= s.poly_size(p)) {
                throw ParseError("mark out of range");
            }
            s.marks.push_back(Corner{p, v});
        }
        if (j.contains("certificates")) {
            for (const auto& c : j.at("certificates")) {
                int p = c.at("poly").get<int>();
                if (p < 0 || p >= s.poly_count()) throw ParseError("certificate polygon out of range");
                s.certificates.push_back(CrossCircleCertificate{p, vec2_from_json(c.at("point"))});
            }
        }
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad surface: ") + e.what());
    }
}

json involution_to_json(const Involution& inv) {
    json centers = json::array();
    for (const auto& c : inv.centers) centers.push_back(vec2_to_json(c));
    return json{{"poly_map", inv.poly_map}, {"centers", std::move(centers)}};
}

Involution involution_from_json(const json& j) {
    try {
        Involution inv;
        inv.poly_map = j.at("poly_map").get<std::vector<int>>();
        for (const auto& c : j.at("centers")) inv.centers.push_back(vec2_from_json(c));
        if (inv.poly_map.size() != inv.centers.size()) {
            throw ParseError("poly_map and centers have different lengths");
        }
        return inv;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad involution: ") + e.what());
    }
}

json diagram_to_json(const Diagram& dg) {
    json verts = json::array();
    for (const auto& v : dg.vertices) {
        verts.push_back(
            json{{"id", v.id}, {"kind", v.kind == VertexKind::Periodic ? "periodic" : "minimal"}});
    }
    json halves = json::array();
    for (const auto& h : dg.half_edges) {
        halves.push_back(json{{"vertex", h.vertex},
                              {"style", h.style == HalfEdgeStyle::Solid ? "solid" : "dotted"}});
    }
    json fulls = json::array();
    for (const auto& [a, b] : dg.full_edges) fulls.push_back(json::array({a, b}));
    return json{{"vertices", std::move(verts)},
                {"half_edges", std::move(halves)},
                {"full_edges", std::move(fulls)}};
}

Diagram diagram_from_json(const json& j) {
    try {
        Diagram dg;
        for (const auto& v : j.at("vertices")) {
            std::string kind = v.at("kind").get<std::string>();
            if (kind != "periodic" && kind != "minimal") {
                throw ParseError("vertex kind must be \"periodic\" or \"minimal\"");
            }
            dg.vertices.push_back(DiagramVertex{
                v.at("id").get<int>(), kind == "periodic" ? VertexKind::Periodic : VertexKind::Minimal});
        }
        for (const auto& h : j.at("half_edges")) {
            std::string style = h.at("style").get<std::string>();
            if (style != "solid" && style != "dotted") {
                throw ParseError("half-edge style must be \"solid\" or \"dotted\"");
            }
            dg.half_edges.push_back(DiagramHalfEdge{
                h.at("vertex").get<int>(),
                style == "solid" ? HalfEdgeStyle::Solid : HalfEdgeStyle::Dotted});
        }
        for (const auto& f : j.at("full_edges")) {
            if (!f.is_array() || f.size() != 2) throw ParseError("full edge is not a pair");
            dg.full_edges.emplace_back(f[0].get<int>(), f[1].get<int>());
        }
        return dg;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad diagram: ") + e.what());
    }
}

}  // namespace hypsurf
