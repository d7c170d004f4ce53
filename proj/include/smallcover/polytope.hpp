#pragma once

// Simple polytopes as facet-adjacency structures.  Only the combinatorics is
// kept: a symmetric irreflexive adjacency relation on facet labels, plus
// exact center coordinates for the 120-cell.  Facets are 0-based internally;
// all file formats and reports use 1-based labels.

#include "smallcover/center_table.hpp"
#include "smallcover/quaternion.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace smallcover {

class Polytope {
public:
    std::string name;
    int dimension = 0;
    int facet_count = 0;
    std::vector<Quaternion> centers;  // empty when the polytope is coordinate-free
    int declared_vertices = -1;       // -1 when unknown

    Polytope() = default;
    Polytope(std::string name_, int dim, int m)
        : name(std::move(name_)), dimension(dim), facet_count(m),
          adjacency_(m, std::vector<char>(m, 0)) {}

    bool adjacent(int i, int j) const { return adjacency_[i][j] != 0; }

    void set_adjacent(int i, int j) {
        if (i == j) throw std::invalid_argument("polytope: facet adjacent to itself");
        adjacency_[i][j] = adjacency_[j][i] = 1;
    }

    const std::vector<int>& neighbors(int i) const {
        if (neighbors_.empty()) build_neighbor_lists();
        return neighbors_[i];
    }

    int degree(int i) const { return static_cast<int>(neighbors(i).size()); }

    bool has_centers() const { return !centers.empty(); }

    // Facet i together with its neighbours, sorted increasingly.
    std::vector<int> block(int i) const {
        std::vector<int> b = neighbors(i);
        b.push_back(i);
        std::sort(b.begin(), b.end());
        return b;
    }

    // All size-k cliques of the adjacency graph, each sorted, the whole list
    // sorted.  Backtracking over neighbour intersections in label order.
    std::vector<std::vector<int>> cliques(int k) const {
        if (k < 1 || k > dimension)
            throw std::invalid_argument("cliques: k out of range 1..dimension");
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        extend_clique(cur, 0, k, out);
        return out;
    }

    int64_t clique_count(int k) const { return static_cast<int64_t>(cliques(k).size()); }

    // True when the n-clique count matches the declared vertex count; with no
    // declared count there is nothing to check.
    bool is_flag_consistent() const {
        if (declared_vertices < 0) return true;
        return clique_count(dimension) == declared_vertices;
    }

private:
    std::vector<std::vector<char>> adjacency_;
    mutable std::vector<std::vector<int>> neighbors_;

    void build_neighbor_lists() const {
        neighbors_.assign(facet_count, {});
        for (int i = 0; i < facet_count; ++i)
            for (int j = 0; j < facet_count; ++j)
                if (adjacency_[i][j]) neighbors_[i].push_back(j);
    }

    void extend_clique(std::vector<int>& cur, int start, int k,
                       std::vector<std::vector<int>>& out) const {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < facet_count; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!adjacency_[u][v]) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            extend_clique(cur, v + 1, k, out);
            cur.pop_back();
        }
    }
};

// One layer of the spherical layer structure: all facets at a common exact
// cosine from the base facet's center, most distant last.
struct Layer {
    QuadraticRational cosine;
    std::vector<int> facets;
};

// Partition of the facets by inner product with the base facet's center.
// For the 120-cell the cosines are the nine values
// {1, phi/2, 1/2, 1/phi/2, 0, -1/phi/2, -1/2, -phi/2, -1} with layer sizes
// (1,12,20,12,30,12,20,12,1); any other cosine is rejected.
inline std::vector<Layer> layers(const Polytope& P, int base) {
    if (!P.has_centers()) throw std::invalid_argument("layers: polytope has no centers");
    const QuadraticRational phi = golden_ratio();
    const QuadraticRational phi_inv = golden_ratio_inverse();
    const QuadraticRational half(Rational(1, 2), Rational(0));
    std::vector<QuadraticRational> expected = {
        QuadraticRational(1), phi * half, half, phi_inv * half, QuadraticRational(0),
        -(phi_inv * half), -half, -(phi * half), QuadraticRational(-1)};

    std::vector<Layer> out;
    for (const auto& c : expected) out.push_back({c, {}});
    for (int j = 0; j < P.facet_count; ++j) {
        QuadraticRational ip = inner_product(P.centers[base], P.centers[j]);
        bool placed = false;
        for (auto& layer : out)
            if (layer.cosine == ip) { layer.facets.push_back(j); placed = true; break; }
        if (!placed) throw std::runtime_error("layers: inner product outside the expected values");
    }
    return out;
}

namespace detail {

inline QuadraticRational center_entry(int facet, int comp) {
    const int* c = kCenterTable[facet][comp];
    return {Rational(c[0], c[1]), Rational(c[2], c[3])};
}

// The 120 unit icosians: 24 Hurwitz units plus the 96 quaternions obtained
// from (0, ±1, ±1/phi, ±phi)/2 by even coordinate permutations.
inline std::vector<Quaternion> generated_center_set() {
    std::vector<Quaternion> out;
    const QuadraticRational zero(0), one(1), mone(-1);
    const QuadraticRational half(Rational(1, 2), Rational(0));
    const QuadraticRational phi = golden_ratio();
    const QuadraticRational phi_inv = golden_ratio_inverse();

    for (int axis = 0; axis < 4; ++axis)
        for (int s = 0; s < 2; ++s) {
            QuadraticRational v[4] = {zero, zero, zero, zero};
            v[axis] = s ? mone : one;
            out.push_back({v[0], v[1], v[2], v[3]});
        }
    for (int mask = 0; mask < 16; ++mask) {
        QuadraticRational v[4];
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i & 1) ? -half : half;
        out.push_back({v[0], v[1], v[2], v[3]});
    }

    static const int even_perms[12][4] = {
        {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 3, 2, 0},
        {2, 0, 1, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0}};
    QuadraticRational base[4] = {zero, one * half, phi_inv * half, phi * half};
    for (const auto& p : even_perms)
        for (int mask = 0; mask < 8; ++mask) {
            QuadraticRational v[4];
            int bit = 0;
            for (int i = 0; i < 4; ++i) {
                QuadraticRational val = base[p[i]];
                if (p[i] != 0) {  // the zero slot carries no sign
                    if (mask >> bit & 1) val = -val;
                    ++bit;
                }
                v[i] = val;
            }
            out.push_back({v[0], v[1], v[2], v[3]});
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

// The right-angled 120-cell: 120 dodecahedral facets in the frozen census
// label order, adjacency decided by inner product phi/2 between centers.
// Construction aborts if any facet fails to have exactly 12 neighbours.
inline Polytope build_120cell() {
    Polytope P("120cell", 4, 120);
    P.declared_vertices = 600;
    P.centers.resize(120);
    for (int i = 0; i < 120; ++i)
        P.centers[i] = {detail::center_entry(i, 0), detail::center_entry(i, 1),
                        detail::center_entry(i, 2), detail::center_entry(i, 3)};

    const QuadraticRational cos_adjacent = golden_ratio() * QuadraticRational(Rational(1, 2), Rational(0));
    for (int i = 0; i < 120; ++i)
        for (int j = i + 1; j < 120; ++j)
            if (inner_product(P.centers[i], P.centers[j]) == cos_adjacent) P.set_adjacent(i, j);

    for (int i = 0; i < 120; ++i)
        if (P.degree(i) != 12)
            throw std::runtime_error("build_120cell: facet without exactly 12 neighbours");
    return P;
}

// The n-cube: 2n facets, one per coordinate then their opposites, so that
// F1..Fn are mutually adjacent; facet i is adjacent to all but its opposite.
inline Polytope build_cube(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("build_cube: n out of range 1..6");
    Polytope P("cube" + std::to_string(n), n, 2 * n);
    P.declared_vertices = 1 << n;
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i + 1; j < 2 * n; ++j)
            if (j != i + n) P.set_adjacent(i, j);
    return P;
}

// The Loebell polytope L_n: top, upper n-ring, lower n-ring, bottom, with
// the two rings offset.  Label order T, U_0..U_{n-1}, L_0..L_{n-1}, B keeps
// the first three facets mutually adjacent for GL-normalisation.
inline Polytope build_lobell(int n) {
    if (n < 5) throw std::invalid_argument("build_lobell: n must be at least 5");
    Polytope P("lobell" + std::to_string(n), 3, 2 * n + 2);
    P.declared_vertices = 4 * n;
    int top = 0, bottom = 2 * n + 1;
    auto upper = [&](int i) { return 1 + (i % n + n) % n; };
    auto lower = [&](int i) { return 1 + n + (i % n + n) % n; };
    for (int i = 0; i < n; ++i) {
        P.set_adjacent(top, upper(i));
        P.set_adjacent(bottom, lower(i));
        P.set_adjacent(upper(i), upper(i + 1));
        P.set_adjacent(lower(i), lower(i + 1));
        P.set_adjacent(upper(i), lower(i));
        P.set_adjacent(upper(i), lower(i + 1));
    }
    return P;
}

// Combinatorial dodecahedron with the block labelling used by the census
// walkthroughs: block(F1) = {F1..F6} and block(F2) = {F1,F2,F3,F4,F7,F8}.
inline Polytope build_dodecahedron() {
    Polytope P("dodecahedron", 3, 12);
    P.declared_vertices = 20;
    // upper ring in cyclic order F5-F3-F2-F4-F6, lower ring F10-F11-F7-F8-F9
    static const int upper[5] = {4, 2, 1, 3, 5};
    static const int lowerr[5] = {9, 10, 6, 7, 8};
    for (int i = 0; i < 5; ++i) {
        P.set_adjacent(0, upper[i]);
        P.set_adjacent(11, lowerr[i]);
        P.set_adjacent(upper[i], upper[(i + 1) % 5]);
        P.set_adjacent(lowerr[i], lowerr[(i + 1) % 5]);
        P.set_adjacent(upper[i], lowerr[i]);
        P.set_adjacent(upper[i], lowerr[(i + 1) % 5]);
    }
    return P;
}

}  // namespace smallcover
