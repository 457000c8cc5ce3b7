#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "hypsurf/assembler.hpp"
#include "hypsurf/blocks.hpp"
#include "hypsurf/errors.hpp"
#include "hypsurf/flow.hpp"
#include "hypsurf/json_io.hpp"
#include "hypsurf/svg.hpp"
#include "hypsurf/verifier.hpp"

namespace {

using hypsurf::QuadExt;
using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hypsurf::ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hypsurf::ParseError("cannot write " + path);
    out << content;
}

json parse_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw hypsurf::ParseError(path + ": " + e.what());
    }
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_file(out_path, j.dump(2) + "\n");
    }
}

const char* kind_name(hypsurf::PieceKind k) {
    switch (k) {
        case hypsurf::PieceKind::Periodic: return "periodic";
        case hypsurf::PieceKind::MinimalCertified: return "minimal-certified";
        default: return "minimal-heuristic";
    }
}

json decompose_report(const hypsurf::Surface& s, const hypsurf::DecomposeResult& dec) {
    json pieces = json::array();
    for (size_t i = 0; i < dec.pieces.size(); ++i) {
        const auto& k = dec.kinds[i];
        json jp{{"kind", kind_name(k.kind)}, {"area", hypsurf::quad_to_json(area(dec.pieces[i]))}};
        if (k.kind == hypsurf::PieceKind::Periodic) {
            jp["circumference"] = hypsurf::quad_to_json(k.circumference);
            jp["width"] = hypsurf::quad_to_json(k.width);
        } else if (k.kind == hypsurf::PieceKind::MinimalCertified) {
            jp["rotation"] = hypsurf::quad_to_json(k.rotation);
        } else {
            jp["bound"] = hypsurf::quad_to_json(k.bound);
        }
        pieces.push_back(std::move(jp));
    }
    json conns = json::array();
    for (const auto& c : dec.connections) {
        conns.push_back(json{{"from_orbit", c.from_orbit},
                             {"to_orbit", c.to_orbit},
                             {"length", hypsurf::quad_to_json(c.length)}});
    }
    return json{{"periodic", dec.periodic_count}, {"minimal", dec.minimal_count},
                {"pieces", std::move(pieces)},   {"connections", std::move(conns)},
                {"exceeded_rays", dec.exceeded_rays}, {"area", hypsurf::quad_to_json(area(s))}};
}

const char* builder_name(hypsurf::WitnessBuilder b) {
    switch (b) {
        case hypsurf::WitnessBuilder::PCentral: return "p-central";
        case hypsurf::WitnessBuilder::MCentral: return "m-central";
        default: return "handcrafted";
    }
}

json evidence_json(const hypsurf::EvidenceReport& rep,
                   const std::vector<std::pair<std::string, std::string>>& files) {
    json pairs = json::array();
    size_t wi = 0;
    for (const auto& pe : rep.pairs) {
        json ws = json::array();
        for (const auto& w : pe.witnesses) {
            json jw{{"builder", builder_name(w.builder)},
                    {"ok", w.report.ok},
                    {"genus", w.report.genus},
                    {"stratum", w.report.torus ? json::array() : json(w.report.stratum)},
                    {"fixed_points", w.report.fixed_points},
                    {"periodic", w.report.periodic},
                    {"minimal", w.report.minimal},
                    {"diagram_isomorphic", w.report.diagram_isomorphic},
                    {"errors", w.report.errors}};
            if (wi < files.size()) {
                jw["surface_file"] = files[wi].first;
                jw["diagram_file"] = files[wi].second;
            }
            ++wi;
            ws.push_back(std::move(jw));
        }
        pairs.push_back(json{{"p", pe.p}, {"m", pe.m}, {"ok", pe.ok}, {"witnesses", std::move(ws)}});
    }
    json inf = json::array();
    for (const auto& ev : rep.infeasible) {
        inf.push_back(json{{"p", ev.p},
                           {"m", ev.m},
                           {"min_half_edges", ev.min_required},
                           {"budget", ev.budget},
                           {"by_bound", ev.by_bound},
                           {"by_torus_rule", ev.by_torus_rule}});
    }
    json jn;
    if (rep.minimal_bound >= 0) {
        jn = json{{"m_bound", rep.minimal_bound}, {"ok", rep.minimal_bound_ok}};
    }
    return json{{"genus", rep.genus},
                {"stratum", rep.kind == hypsurf::StratumKind::SingleZero ? "single" : "double"},
                {"half_edge_budget", rep.budget},
                {"pairs", std::move(pairs)},
                {"infeasible", std::move(inf)},
                {"minimal_bound", std::move(jn)},
                {"ok", rep.ok}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperelliptic translation surfaces: blocks, diagrams, flows"};
    app.require_subcommand(1);

    std::string family, alpha_expr = "sqrt2", out_path, svg_path;
    int n = 1;
    auto* block = app.add_subcommand("block", "emit a P or M building block");
    block->add_option("family", family, "P or M")->required()->check(CLI::IsMember({"P", "M"}));
    block->add_option("--n", n, "block size")->required();
    block->add_option("--alpha", alpha_expr, "twist, e.g. '1/2+1/1*sqrt2' (M only)");
    block->add_option("--out", out_path, "output JSON file (default stdout)");
    block->add_option("--svg", svg_path, "also render SVG to this file");

    std::string diagram_path;
    auto* assemble = app.add_subcommand("assemble", "realize a diagram as a surface");
    assemble->add_option("--diagram", diagram_path, "diagram JSON file")->required();
    assemble->add_option("--alpha", alpha_expr, "twist for minimal blocks");
    assemble->add_option("--out", out_path, "output JSON file (default stdout)");
    assemble->add_option("--svg", svg_path, "also render SVG to this file");

    std::string surface_path, bound_expr;
    auto* classify = app.add_subcommand("classify", "decompose the vertical flow of a surface");
    classify->add_option("--surface", surface_path, "surface JSON file")->required();
    classify->add_option("--bound", bound_expr, "trace bound override");
    classify->add_option("--out", out_path, "output JSON file (default stdout)");

    std::string dg_family;
    int dk = 1, dp = 0, dm = 0;
    auto* diagram = app.add_subcommand("diagram", "build a star diagram");
    diagram->add_option("family", dg_family, "p-central or m-central")
        ->required()
        ->check(CLI::IsMember({"p-central", "m-central"}));
    diagram->add_option("--k", dk, "total half-edges")->required();
    diagram->add_option("--p", dp, "periodic components")->required();
    diagram->add_option("--m", dm, "minimal components")->required();
    diagram->add_option("--out", out_path, "output JSON file (default stdout)");
    diagram->add_option("--svg", svg_path, "also render SVG to this file");

    int genus = 2;
    std::string stratum = "single", out_dir;
    auto* verify = app.add_subcommand("verify-theorem", "realize and verify all component pairs");
    verify->add_option("--genus", genus, "genus")->required();
    verify->add_option("--stratum", stratum, "single or double zero")
        ->required()
        ->check(CLI::IsMember({"single", "double"}));
    verify->add_option("--alpha", alpha_expr, "twist for minimal blocks");
    verify->add_option("--out", out_dir, "evidence directory");

    std::string in_path;
    auto* render = app.add_subcommand("render", "render a surface or diagram JSON as SVG");
    render->add_option("--in", in_path, "input JSON file")->required();
    render->add_option("--svg", svg_path, "output SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        QuadExt alpha = hypsurf::parse_quad_ext(alpha_expr);

        if (block->parsed()) {
            hypsurf::Block b =
                family == "P" ? hypsurf::construct_P(n) : hypsurf::construct_M(n, alpha);
            json j = hypsurf::surface_to_json(b.surface);
            j["involution"] = hypsurf::involution_to_json(b.involution);
            j["weierstrass_edges"] = b.weierstrass_edges;
            emit(j, out_path);
            if (!svg_path.empty()) {
                write_file(svg_path, hypsurf::render_surface_svg(b.surface, &b.involution));
            }
        } else if (assemble->parsed()) {
            hypsurf::Diagram dg = hypsurf::diagram_from_json(parse_file(diagram_path));
            hypsurf::Realization r = hypsurf::realize_diagram(dg, alpha);
            json j = hypsurf::surface_to_json(r.net);
            j["involution"] = hypsurf::involution_to_json(r.involution);
            j["provenance"] = r.provenance;
            emit(j, out_path);
            if (!svg_path.empty()) {
                write_file(svg_path, hypsurf::render_surface_svg(r.net, &r.involution));
            }
        } else if (classify->parsed()) {
            hypsurf::Surface s = hypsurf::surface_from_json(parse_file(surface_path));
            hypsurf::require_valid(s);
            hypsurf::DecomposeResult dec =
                bound_expr.empty() ? hypsurf::decompose_vertical(s)
                                   : hypsurf::decompose_vertical(s, hypsurf::parse_quad_ext(bound_expr));
            emit(decompose_report(s, dec), out_path);
        } else if (diagram->parsed()) {
            hypsurf::Diagram dg = dg_family == "p-central" ? hypsurf::build_p_central(dk, dp, dm)
                                                           : hypsurf::build_m_central(dk, dp, dm);
            emit(hypsurf::diagram_to_json(dg), out_path);
            if (!svg_path.empty()) write_file(svg_path, hypsurf::render_diagram_svg(dg));
        } else if (verify->parsed()) {
            hypsurf::StratumKind kind = stratum == "single" ? hypsurf::StratumKind::SingleZero
                                                            : hypsurf::StratumKind::DoubleZero;
            hypsurf::EvidenceReport rep = hypsurf::verify_theorem(genus, kind, alpha);
            std::vector<std::pair<std::string, std::string>> files;
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                for (const auto& pe : rep.pairs) {
                    for (const auto& w : pe.witnesses) {
                        std::string stem = "witness_p" + std::to_string(pe.p) + "_m" +
                                           std::to_string(pe.m) + "_" + builder_name(w.builder);
                        json js = hypsurf::surface_to_json(w.surface);
                        js["involution"] = hypsurf::involution_to_json(w.involution);
                        write_file(out_dir + "/" + stem + ".surface.json", js.dump(2) + "\n");
                        write_file(out_dir + "/" + stem + ".diagram.json",
                                   hypsurf::diagram_to_json(w.diagram).dump(2) + "\n");
                        write_file(out_dir + "/" + stem + ".svg",
                                   hypsurf::render_surface_svg(w.surface, &w.involution));
                        files.emplace_back(stem + ".surface.json", stem + ".diagram.json");
                    }
                }
            }
            json j = evidence_json(rep, files);
            if (!out_dir.empty()) write_file(out_dir + "/evidence.json", j.dump(2) + "\n");
            for (const auto& pe : rep.pairs) {
                std::cout << "pair (p=" << pe.p << ", m=" << pe.m << "): "
                          << (pe.ok ? "ok" : "FAILED") << "\n";
            }
            std::cout << (rep.ok ? "theorem evidence complete" : "theorem evidence FAILED") << "\n";
            if (!rep.ok) return 1;
        } else if (render->parsed()) {
            json j = parse_file(in_path);
            if (j.contains("polygons")) {
                hypsurf::Surface s = hypsurf::surface_from_json(j);
                if (j.contains("involution")) {
                    hypsurf::Involution inv = hypsurf::involution_from_json(j.at("involution"));
                    write_file(svg_path, hypsurf::render_surface_svg(s, &inv));
                } else {
                    write_file(svg_path, hypsurf::render_surface_svg(s));
                }
            } else if (j.contains("half_edges")) {
                write_file(svg_path, hypsurf::render_diagram_svg(hypsurf::diagram_from_json(j)));
            } else {
                throw hypsurf::ParseError(in_path + ": neither a surface nor a diagram");
            }
        }
    } catch (const hypsurf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hypsurf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
