#include "hypsurf/blocks.hpp"

#include <algorithm>
#include <numeric>

#include "hypsurf/errors.hpp"

namespace hypsurf {

std::vector<std::vector<int>> lemma_technical_classes(const std::vector<Rat>& points) {
    int n = static_cast<int>(points.size());
    if (n == 0) throw DomainError("empty point set");
    std::vector<Rat> xs(points.size());
    std::transform(points.begin(), points.end(), xs.begin(), frac_part);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw DomainError("duplicate circle positions");

    std::vector<int> parent(2 * n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    // x_i ~ y_{i+1} and x_{i+1} ~ y_i, indices mod n; y_j is point n + j.
    for (int i = 0; i < n; ++i) {
        unite(i, n + (i + 1) % n);
        unite((i + 1) % n, n + i);
    }

    std::vector<std::vector<int>> classes;
    std::vector<int> class_of_root(2 * n, -1);
    for (int i = 0; i < 2 * n; ++i) {
        int r = find(i);
        if (class_of_root[r] < 0) {
            class_of_root[r] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[class_of_root[r]].push_back(i);
    }
    return classes;
}

Block construct_P(int n) {
    if (n < 1) throw BlockError("P block needs n >= 1");
    Surface s;
    std::vector<Vec2> poly;
    poly.push_back({0, 0});
    for (int i = 0; i <= n; ++i) poly.push_back({1, i});
    for (int i = n; i >= 1; --i) poly.push_back({0, i});
    s.polys.push_back(std::move(poly));

    // Edge i (1..n) is the right strip at heights [i-1, i]; the matching
    // left strip at heights [n-i, n-i+1] is edge n+1+i.
    s.glue.assign(2 * n + 2, Surface::BOUNDARY);
    s.glue[0] = n + 1;
    s.glue[n + 1] = 0;
    for (int i = 1; i <= n; ++i) {
        s.glue[i] = n + 1 + i;
        s.glue[n + 1 + i] = i;
    }

    VertexOrbits orbits = compute_orbits(s);
    for (int o = 0; o < orbits.count(); ++o)
        if (orbits.angle_units[o] == 1) s.marks.push_back(orbits.orbits[o].front());
    require_valid(s);

    Block b;
    b.family = BlockFamily::P;
    b.n = n;
    b.surface = std::move(s);
    b.involution.poly_map = {0};
    b.involution.centers = {{1, n}};
    require_involution(b.surface, b.involution);
    for (int i = 1; i <= n; ++i) b.weierstrass_edges.push_back(i);
    return b;
}

Block construct_M(int n, const QuadExt& alpha, bool require_irrational) {
    if (n < 2) throw BlockError("M block needs n >= 2");
    if (alpha.sign() <= 0) throw BlockError("twist parameter must be positive");
    if (require_irrational && alpha.is_rational())
        throw BlockError("twist parameter must be irrational");

    Surface s = construct_P(n).surface;
    if (!alpha.is_rational()) s.field_d = alpha.d();
    s = apply_shear(s, Mat2::vertical_shear(n - 1));
    // Chord at height n separates the top slope C; chord at height n-1 then
    // separates the middle square B from the bottom slope A.
    split_polygon_chord(s, 0, 2, n + 2);      // poly 0 -> C, new poly 1
    split_polygon_chord(s, 1, n + 1, 1);      // poly 1 -> B, new poly 2 = A
    s = apply_shear(s, Mat2::horizontal_shear(alpha), {1});

    QuadExt two_n1 = 2 * n - 1;
    Block b;
    b.family = BlockFamily::M;
    b.n = n;
    b.alpha = alpha;
    b.involution.poly_map = {2, 1, 0};
    b.involution.centers = {{1, two_n1},
                            {QuadExt(1) + alpha * two_n1, two_n1},
                            {1, two_n1}};
    s.certificates.push_back(
        {1, QuadExt(Rat(1, 2)) * Vec2{QuadExt(1) + alpha * two_n1, two_n1}});
    require_valid(s);
    b.surface = std::move(s);
    require_involution(b.surface, b.involution);

    // Seams s_2..s_n are the upward right edges of C, in catalog order.
    for (int j = 0; j + 2 <= n; ++j) b.weierstrass_edges.push_back(b.surface.edge_id(0, j));
    block_weierstrass_edges(b);
    return b;
}

std::vector<int> block_weierstrass_edges(const Block& b) {
    InvolutionReport rep = verify_involution(b.surface, b.involution);
    if (!rep.ok) throw BlockError("block involution invalid: " + rep.errors.front());
    int expected = b.family == BlockFamily::P ? b.n : b.n - 1;
    if (static_cast<int>(b.weierstrass_edges.size()) != expected)
        throw BlockError("seam catalog has the wrong size");
    for (int e : b.weierstrass_edges) {
        if (e < 0 || e >= b.surface.edge_count()) throw BlockError("seam edge out of range");
        auto [p, l] = b.surface.edge_of(e);
        if (!(b.surface.edge_vec(p, l) == Vec2{0, 1}))
            throw BlockError("seam edge is not an upward unit edge");
        int partner = b.surface.glue[e];
        if (partner == Surface::BOUNDARY ||
            involution_edge_image(b.surface, b.involution, rep, e) != partner)
            throw BlockError("seam edge pair is not swapped by the involution");
    }
    return b.weierstrass_edges;
}

}  // namespace hypsurf
