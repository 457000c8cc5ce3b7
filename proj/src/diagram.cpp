#include "hypsurf/diagram.hpp"

#include <algorithm>
#include <map>

#include "hypsurf/errors.hpp"

namespace hypsurf {

namespace {

std::map<int, int> index_by_id(const Diagram& dg) {
    std::map<int, int> idx;
    for (size_t i = 0; i < dg.vertices.size(); ++i) idx[dg.vertices[i].id] = static_cast<int>(i);
    return idx;
}

}  // namespace

DiagramReport validate_diagram(const Diagram& dg) {
    DiagramReport rep;
    int nv = static_cast<int>(dg.vertices.size());
    int nh = dg.half_edge_count();
    if (nv == 0) {
        rep.fail("diagram has no vertices");
        return rep;
    }
    auto idx = index_by_id(dg);
    if (static_cast<int>(idx.size()) != nv) {
        rep.fail("duplicate vertex ids");
        return rep;
    }
    rep.degrees.assign(nv, 0);
    for (int h = 0; h < nh; ++h) {
        auto it = idx.find(dg.half_edges[h].vertex);
        if (it == idx.end()) {
            rep.fail("half-edge " + std::to_string(h) + " names an unknown vertex");
            return rep;
        }
        ++rep.degrees[it->second];
    }

    std::vector<int> used(nh, 0);
    std::vector<std::vector<int>> adj(nv);
    for (const auto& [h1, h2] : dg.full_edges) {
        if (h1 < 0 || h1 >= nh || h2 < 0 || h2 >= nh) {
            rep.fail("full edge references a half-edge out of range");
            return rep;
        }
        if (h1 == h2) {
            rep.fail("full edge pairs a half-edge with itself");
            continue;
        }
        if (used[h1]++ || used[h2]++) {
            rep.fail("half-edge used by more than one full edge");
            continue;
        }
        if (dg.half_edges[h1].style != HalfEdgeStyle::Solid ||
            dg.half_edges[h2].style != HalfEdgeStyle::Solid) {
            rep.fail("full edge joins a dotted half-edge");
            continue;
        }
        int u = idx[dg.half_edges[h1].vertex];
        int v = idx[dg.half_edges[h2].vertex];
        if (u == v) {
            rep.fail("full edge joins a vertex to itself");
            continue;
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    for (int v = 0; v < nv; ++v) {
        if (dg.vertices[v].kind != VertexKind::Minimal) continue;
        if (dotted_count(dg, dg.vertices[v].id) == 0)
            rep.fail("minimal vertex " + std::to_string(dg.vertices[v].id) +
                     " has no dotted half-edge");
    }

    if (static_cast<int>(dg.full_edges.size()) != nv - 1) {
        rep.fail("full edges do not form a spanning tree (wrong count)");
    } else {
        std::vector<char> seen(nv, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != nv) rep.fail("full edges do not form a spanning tree (disconnected)");
    }
    return rep;
}

void require_diagram(const Diagram& dg) {
    DiagramReport rep = validate_diagram(dg);
    if (!rep.ok) throw DiagramError("invalid diagram: " + rep.errors.front());
}

int min_half_edges(int p, int m) { return 3 * m + 2 * p - 2; }

bool feasible_pair(int g, StratumKind kind, int p, int m) {
    if (g < 1) throw DomainError("genus must be at least 1");
    if (p < 0 || m < 0 || p + m < 1) throw DomainError("need at least one component");
    if (kind == StratumKind::SingleZero) return 3 * m + 2 * p - 1 <= 2 * g;
    if (g == 1) return (p == 1 && m == 0) || (p == 0 && m == 1);
    return 3 * m + 2 * p - 2 <= 2 * g;
}

namespace {

Diagram build_star(int k, int p, int m, bool central_minimal) {
    if (p + m < 1) throw DiagramError("need at least one vertex");
    if (central_minimal ? m < 1 : p < 1)
        throw DiagramError(central_minimal ? "m-central diagram needs a minimal vertex"
                                           : "p-central diagram needs a periodic vertex");
    int need = min_half_edges(p, m);
    if (k < need)
        throw DiagramError("half-edge budget " + std::to_string(k) + " is below the minimum " +
                           std::to_string(need) + " for (p=" + std::to_string(p) +
                           ", m=" + std::to_string(m) + ")");

    Diagram dg;
    dg.vertices.push_back({0, central_minimal ? VertexKind::Minimal : VertexKind::Periodic});
    int leaves_p = central_minimal ? p : p - 1;
    int leaves_m = central_minimal ? m - 1 : m;
    for (int i = 0; i < leaves_p; ++i)
        dg.vertices.push_back({static_cast<int>(dg.vertices.size()), VertexKind::Periodic});
    for (int i = 0; i < leaves_m; ++i)
        dg.vertices.push_back({static_cast<int>(dg.vertices.size()), VertexKind::Minimal});

    for (int v = 1; v < static_cast<int>(dg.vertices.size()); ++v) {
        int h1 = dg.half_edge_count();
        dg.half_edges.push_back({0, HalfEdgeStyle::Solid});
        dg.half_edges.push_back({v, HalfEdgeStyle::Solid});
        dg.full_edges.emplace_back(h1, h1 + 1);
    }
    for (const DiagramVertex& v : dg.vertices)
        if (v.kind == VertexKind::Minimal) dg.half_edges.push_back({v.id, HalfEdgeStyle::Dotted});
    int spare = k - need;
    for (int i = 0; i < spare; ++i) dg.half_edges.push_back({0, HalfEdgeStyle::Solid});

    require_diagram(dg);
    return dg;
}

}  // namespace

Diagram build_p_central(int k, int p, int m) { return build_star(k, p, m, false); }

Diagram build_m_central(int k, int p, int m) { return build_star(k, p, m, true); }

StratumPrediction predicted_stratum(const Diagram& dg) {
    StratumPrediction out;
    int k = dg.half_edge_count();
    if (k < 1) throw DiagramError("diagram has no half-edges");
    if (k <= 2) {
        out.torus = true;
    } else if (k % 2 == 1) {
        out.orders = {k - 1};
    } else {
        out.orders = {k / 2 - 1, k / 2 - 1};
    }
    return out;
}

int predicted_genus(const Diagram& dg) {
    int k = dg.half_edge_count();
    if (k < 1) throw DiagramError("diagram has no half-edges");
    if (k <= 2) return 1;
    return k % 2 == 1 ? (k + 1) / 2 : k / 2;
}

int periodic_vertex_count(const Diagram& dg) {
    int c = 0;
    for (const auto& v : dg.vertices) c += v.kind == VertexKind::Periodic;
    return c;
}

int minimal_vertex_count(const Diagram& dg) {
    int c = 0;
    for (const auto& v : dg.vertices) c += v.kind == VertexKind::Minimal;
    return c;
}

int free_solid_count(const Diagram& dg, int vertex_id) {
    std::vector<char> used(dg.half_edges.size(), 0);
    for (const auto& [h1, h2] : dg.full_edges) used[h1] = used[h2] = 1;
    int c = 0;
    for (size_t h = 0; h < dg.half_edges.size(); ++h)
        c += !used[h] && dg.half_edges[h].vertex == vertex_id &&
             dg.half_edges[h].style == HalfEdgeStyle::Solid;
    return c;
}

int dotted_count(const Diagram& dg, int vertex_id) {
    int c = 0;
    for (const auto& h : dg.half_edges)
        c += h.vertex == vertex_id && h.style == HalfEdgeStyle::Dotted;
    return c;
}

namespace {

std::string encode_rooted(const std::vector<std::string>& labels,
                          const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != parent) kids.push_back(encode_rooted(labels, adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(" + labels[v];
    for (const std::string& k : kids) out += k;
    out += ")";
    return out;
}

}  // namespace

std::string canonical_form(const Diagram& dg) {
    require_diagram(dg);
    int nv = static_cast<int>(dg.vertices.size());
    auto idx = index_by_id(dg);
    std::vector<std::string> labels(nv);
    for (int v = 0; v < nv; ++v) {
        const DiagramVertex& dv = dg.vertices[v];
        labels[v] = std::string(dv.kind == VertexKind::Periodic ? "p" : "m") +
                    std::to_string(free_solid_count(dg, dv.id)) + "," +
                    std::to_string(dotted_count(dg, dv.id)) + "|";
    }
    std::vector<std::vector<int>> adj(nv);
    for (const auto& [h1, h2] : dg.full_edges) {
        int u = idx[dg.half_edges[h1].vertex];
        int v = idx[dg.half_edges[h2].vertex];
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    // tree centers by repeated leaf stripping
    std::vector<int> deg(nv);
    for (int v = 0; v < nv; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    std::vector<char> removed(nv, 0);
    int remaining = nv;
    for (int v = 0; v < nv; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int w : adj[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }

    std::string best;
    for (int v = 0; v < nv; ++v) {
        if (removed[v]) continue;
        std::string enc = encode_rooted(labels, adj, v, -1);
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

bool isomorphic(const Diagram& a, const Diagram& b) { return canonical_form(a) == canonical_form(b); }

}  // namespace hypsurf
