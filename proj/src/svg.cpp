#include "hypsurf/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace hypsurf {

namespace {

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[48];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

double approx(const QuadExt& q) {
    double a = q.a().convert_to<double>();
    double b = q.b().convert_to<double>();
    double d = q.d().convert_to<double>();
    return a + b * std::sqrt(d);
}

struct Mapper {
    double minx = 0, maxy = 0, scale = 1, margin = 40;
    double X(double x) const { return margin + (x - minx) * scale; }
    double Y(double y) const { return margin + (maxy - y) * scale; }
};

void text_at(std::ostringstream& os, double x, double y, const std::string& t,
             const char* fill = "#333") {
    os << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" font-size=\"13\" fill=\"" << fill
       << "\" text-anchor=\"middle\">" << t << "</text>\n";
}

}  // namespace

std::string render_surface_svg(const Surface& s, const Involution* inv) {
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    bool first = true;
    for (const auto& poly : s.polys) {
        for (const auto& v : poly) {
            double x = approx(v.x), y = approx(v.y);
            if (first) {
                minx = maxx = x;
                miny = maxy = y;
                first = false;
            } else {
                minx = std::min(minx, x);
                maxx = std::max(maxx, x);
                miny = std::min(miny, y);
                maxy = std::max(maxy, y);
            }
        }
    }
    double w = std::max(maxx - minx, 1e-9), h = std::max(maxy - miny, 1e-9);
    Mapper mp;
    mp.minx = minx;
    mp.maxy = maxy;
    mp.scale = 720.0 / std::max(w, h);
    double width = 2 * mp.margin + w * mp.scale, height = 2 * mp.margin + h * mp.scale;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
       << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";

    for (const auto& poly : s.polys) {
        os << "<polygon points=\"";
        for (size_t i = 0; i < poly.size(); ++i) {
            if (i) os << " ";
            os << fmt(mp.X(approx(poly[i].x))) << "," << fmt(mp.Y(approx(poly[i].y)));
        }
        os << "\" fill=\"#eef3fa\" stroke=\"#334466\" stroke-width=\"1\"/>\n";
    }

    // one label per glued pair, at both edge midpoints nudged inward
    int label = 0;
    std::vector<int> pair_label(s.glue.size(), -1);
    for (int e = 0; e < s.edge_count(); ++e) {
        if (s.glue[e] == Surface::BOUNDARY || s.glue[e] < e) continue;
        pair_label[e] = pair_label[s.glue[e]] = ++label;
    }
    for (int e = 0; e < s.edge_count(); ++e) {
        auto [p, l] = s.edge_of(e);
        double ax = approx(s.edge_tail(p, l).x), ay = approx(s.edge_tail(p, l).y);
        double bx = approx(s.edge_head(p, l).x), by = approx(s.edge_head(p, l).y);
        if (s.glue[e] == Surface::BOUNDARY) {
            os << "<line x1=\"" << fmt(mp.X(ax)) << "\" y1=\"" << fmt(mp.Y(ay)) << "\" x2=\""
               << fmt(mp.X(bx)) << "\" y2=\"" << fmt(mp.Y(by))
               << "\" stroke=\"#cc3333\" stroke-width=\"2\"/>\n";
            continue;
        }
        double cx = 0, cy = 0;
        for (const auto& v : s.polys[p]) {
            cx += approx(v.x);
            cy += approx(v.y);
        }
        cx /= static_cast<double>(s.polys[p].size());
        cy /= static_cast<double>(s.polys[p].size());
        double mx = mp.X((ax + bx) / 2), my = mp.Y((ay + by) / 2);
        double tx = mp.X(cx) - mx, ty = mp.Y(cy) - my;
        double tn = std::max(std::sqrt(tx * tx + ty * ty), 1e-9);
        text_at(os, mx + 14 * tx / tn, my + 14 * ty / tn + 4, std::to_string(pair_label[e]));
    }

    for (const auto& m : s.marks) {
        const Vec2& v = s.polys[m.poly][m.vertex];
        os << "<circle cx=\"" << fmt(mp.X(approx(v.x))) << "\" cy=\"" << fmt(mp.Y(approx(v.y)))
           << "\" r=\"4.5\" fill=\"#cc3333\"/>\n";
    }
    for (const auto& c : s.certificates) {
        os << "<circle cx=\"" << fmt(mp.X(approx(c.point.x))) << "\" cy=\""
           << fmt(mp.Y(approx(c.point.y)))
           << "\" r=\"4\" fill=\"none\" stroke=\"#339933\" stroke-width=\"2\"/>\n";
    }

    if (inv != nullptr) {
        InvolutionReport rep = verify_involution(s, *inv);
        if (rep.ok) {
            for (const auto& fp : rep.fixed_points) {
                double x = mp.X(approx(fp.point.x)), y = mp.Y(approx(fp.point.y));
                os << "<path d=\"M " << fmt(x) << " " << fmt(y - 5) << " L " << fmt(x + 5) << " "
                   << fmt(y) << " L " << fmt(x) << " " << fmt(y + 5) << " L " << fmt(x - 5) << " "
                   << fmt(y) << " Z\" fill=\"#ee9900\" stroke=\"#884400\" stroke-width=\"1\"/>\n";
            }
        }
    }

    os << "</svg>\n";
    return os.str();
}

std::string render_diagram_svg(const Diagram& dg) {
    int n = static_cast<int>(dg.vertices.size());
    double cx = 400, cy = 300, r = n > 1 ? 190 : 0;
    std::map<int, std::pair<double, double>> pos;
    std::map<int, double> radial;
    for (int i = 0; i < n; ++i) {
        double ang = 2 * M_PI * i / std::max(n, 1) - M_PI / 2;
        pos[dg.vertices[i].id] = {cx + r * std::cos(ang), cy + r * std::sin(ang)};
        radial[dg.vertices[i].id] = n > 1 ? ang : -M_PI / 2;
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
          "viewBox=\"0 0 800 600\">\n";

    std::vector<bool> in_full(dg.half_edges.size(), false);
    for (const auto& [a, b] : dg.full_edges) {
        in_full[a] = in_full[b] = true;
        auto [x1, y1] = pos.at(dg.half_edges[a].vertex);
        auto [x2, y2] = pos.at(dg.half_edges[b].vertex);
        os << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
           << "\" y2=\"" << fmt(y2) << "\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
    }

    for (const auto& v : dg.vertices) {
        std::vector<int> stubs;
        for (size_t h = 0; h < dg.half_edges.size(); ++h) {
            if (!in_full[h] && dg.half_edges[h].vertex == v.id) stubs.push_back(static_cast<int>(h));
        }
        auto [x, y] = pos.at(v.id);
        double base = radial.at(v.id);
        for (size_t j = 0; j < stubs.size(); ++j) {
            double ang = base + (static_cast<double>(j) - (static_cast<double>(stubs.size()) - 1) / 2) *
                                    (M_PI / 7);
            double x2 = x + 46 * std::cos(ang), y2 = y + 46 * std::sin(ang);
            bool dotted = dg.half_edges[stubs[j]].style == HalfEdgeStyle::Dotted;
            os << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x2)
               << "\" y2=\"" << fmt(y2) << "\" stroke=\"#333333\" stroke-width=\"2\"";
            if (dotted) os << " stroke-dasharray=\"4 3\"";
            os << "/>\n";
        }
    }

    for (const auto& v : dg.vertices) {
        auto [x, y] = pos.at(v.id);
        if (v.kind == VertexKind::Periodic) {
            os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
               << "\" r=\"9\" fill=\"#334466\"/>\n";
        } else {
            os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
               << "\" r=\"9\" fill=\"white\" stroke=\"#334466\" stroke-width=\"2.5\"/>\n";
        }
        text_at(os, x + 18, y - 12, std::to_string(v.id), "#555555");
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace hypsurf
