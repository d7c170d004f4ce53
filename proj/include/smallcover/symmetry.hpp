#pragma once

// Symmetry groups as facet permutations: the 14,400 symmetries of the
// 120-cell generated by quaternion left/right actions, signed coordinate
// permutations for cubes, and a generic adjacency-graph automorphism
// enumerator used as a coordinate-free cross-check.

#include "smallcover/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace smallcover {

enum class Orientation : uint8_t { preserving, reversing, unknown };

struct FacetPermutation {
    std::vector<int> images;  // images[i] = image label of facet i, 0-based
    Orientation orientation = Orientation::unknown;

    friend bool operator==(const FacetPermutation& a, const FacetPermutation& b) {
        return a.images == b.images;
    }
    friend bool operator<(const FacetPermutation& a, const FacetPermutation& b) {
        return a.images < b.images;
    }
};

inline FacetPermutation identity_permutation(int m) {
    FacetPermutation p;
    p.images.resize(m);
    std::iota(p.images.begin(), p.images.end(), 0);
    p.orientation = Orientation::preserving;
    return p;
}

// (a o b)(i) = a(b(i)); orientation parities multiply.
inline FacetPermutation compose(const FacetPermutation& a, const FacetPermutation& b) {
    FacetPermutation c;
    c.images.resize(a.images.size());
    for (size_t i = 0; i < b.images.size(); ++i) c.images[i] = a.images[b.images[i]];
    if (a.orientation == Orientation::unknown || b.orientation == Orientation::unknown)
        c.orientation = Orientation::unknown;
    else
        c.orientation = (a.orientation == b.orientation) ? Orientation::preserving
                                                         : Orientation::reversing;
    return c;
}

inline FacetPermutation inverse(const FacetPermutation& a) {
    FacetPermutation c;
    c.images.resize(a.images.size());
    for (size_t i = 0; i < a.images.size(); ++i) c.images[a.images[i]] = static_cast<int>(i);
    c.orientation = a.orientation;
    return c;
}

inline bool preserves_adjacency(const Polytope& P, const FacetPermutation& p) {
    for (int i = 0; i < P.facet_count; ++i)
        for (int j = i + 1; j < P.facet_count; ++j)
            if (P.adjacent(i, j) != P.adjacent(p.images[i], p.images[j])) return false;
    return true;
}

namespace detail {

// Multiplication table of the 120 facet centers, which form a group under
// quaternion multiplication.  Every later symmetry computation is pure
// integer table lookup; the table itself is built by exact arithmetic.
struct IcosianTable {
    std::vector<std::vector<int>> mult;  // mult[i][j] = index of c_i * c_j
    std::vector<int> inv;                // index of the conjugate (= inverse)
    int one = -1;

    explicit IcosianTable(const Polytope& P) {
        int m = P.facet_count;
        std::map<Quaternion, int> index;
        for (int i = 0; i < m; ++i) index[P.centers[i]] = i;
        mult.assign(m, std::vector<int>(m, -1));
        inv.assign(m, -1);
        for (int i = 0; i < m; ++i) {
            auto it = index.find(P.centers[i].conjugate());
            if (it == index.end())
                throw std::runtime_error("icosian table: conjugate center missing");
            inv[i] = it->second;
            for (int j = 0; j < m; ++j) {
                auto jt = index.find(P.centers[i] * P.centers[j]);
                if (jt == index.end())
                    throw std::runtime_error("icosian table: product center missing");
                mult[i][j] = jt->second;
            }
        }
        one = index.at(quaternion_one());
    }
};

}  // namespace detail

// The full symmetry group of the 120-cell: orientation-preserving maps
// x -> a x b and orientation-reversing maps x -> a x* b with a, b ranging
// over the 120 centers, deduplicated under (a,b) ~ (-a,-b).  Exactly
// 7,200 + 7,200 = 14,400 facet permutations, sorted by image array.
inline std::vector<FacetPermutation> symmetry_group_120cell(const Polytope& P) {
    if (!P.has_centers() || P.facet_count != 120)
        throw std::invalid_argument("symmetry_group_120cell: needs the 120-cell with centers");
    detail::IcosianTable T(P);
    const int m = P.facet_count;

    std::vector<FacetPermutation> group;
    group.reserve(2 * m * m);
    for (int pass = 0; pass < 2; ++pass) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                FacetPermutation p;
                p.images.resize(m);
                p.orientation = pass == 0 ? Orientation::preserving : Orientation::reversing;
                for (int i = 0; i < m; ++i) {
                    int c = pass == 0 ? i : T.inv[i];
                    p.images[i] = T.mult[a][T.mult[c][b]];
                }
                group.push_back(std::move(p));
            }
    }
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    if (group.size() != 14400)
        throw std::runtime_error("symmetry_group_120cell: expected 14400 elements, got " +
                                 std::to_string(group.size()));
    return group;
}

// Setwise stabilizer of a vertex (an n-clique of facets).
inline std::vector<FacetPermutation> vertex_stabilizer(const std::vector<FacetPermutation>& group,
                                                       std::vector<int> clique) {
    std::sort(clique.begin(), clique.end());
    std::vector<FacetPermutation> out;
    std::vector<int> image(clique.size());
    for (const auto& p : group) {
        for (size_t t = 0; t < clique.size(); ++t) image[t] = p.images[clique[t]];
        std::sort(image.begin(), image.end());
        if (image == clique) out.push_back(p);
    }
    return out;
}

// For each facet i the lexicographically smallest group element sending
// facet 0 to i; the action is facet-transitive so one always exists.
inline std::vector<FacetPermutation> transfer_permutations(
    const std::vector<FacetPermutation>& group, int m) {
    std::vector<FacetPermutation> out(m);
    std::vector<bool> seen(m, false);
    for (const auto& p : group) {
        int i = p.images[0];
        if (!seen[i] || p.images < out[i].images) {
            out[i] = p;
            seen[i] = true;
        }
    }
    for (int i = 0; i < m; ++i)
        if (!seen[i]) throw std::runtime_error("transfer_permutations: action not transitive");
    return out;
}

// Signed coordinate permutations acting on the facets of build_cube(n):
// facet i is the +e_i side, facet n+i its opposite; order 2^n n!.
inline std::vector<FacetPermutation> cube_symmetries(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("cube_symmetries: n out of range 1..5");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<FacetPermutation> out;
    do {
        for (int signs = 0; signs < (1 << n); ++signs) {
            FacetPermutation p;
            p.images.resize(2 * n);
            for (int i = 0; i < n; ++i) {
                bool flip = (signs >> i) & 1;
                p.images[i] = flip ? perm[i] + n : perm[i];
                p.images[i + n] = flip ? perm[i] : perm[i] + n;
            }
            int parity = std::popcount(static_cast<unsigned>(signs)) & 1;
            // permutation parity of perm
            int inv_count = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j]) ++inv_count;
            p.orientation = ((parity + inv_count) % 2 == 0) ? Orientation::preserving
                                                            : Orientation::reversing;
            out.push_back(std::move(p));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// All adjacency-preserving facet bijections, by backtracking with degree
// filtering; placement order maximizes already-placed neighbours.
inline std::vector<FacetPermutation> graph_automorphisms(const Polytope& P) {
    const int m = P.facet_count;
    std::vector<int> order;
    {
        std::vector<bool> placed(m, false);
        for (int step = 0; step < m; ++step) {
            int best = -1, best_cnt = -1;
            for (int v = 0; v < m; ++v) {
                if (placed[v]) continue;
                int cnt = 0;
                for (int u : P.neighbors(v))
                    if (placed[u]) ++cnt;
                if (cnt > best_cnt) { best = v; best_cnt = cnt; }
            }
            order.push_back(best);
            placed[best] = true;
        }
    }

    std::vector<FacetPermutation> out;
    std::vector<int> map_to(m, -1);
    std::vector<bool> used(m, false);

    auto rec = [&](auto&& self, int step) -> void {
        if (step == m) {
            FacetPermutation p;
            p.images = map_to;
            out.push_back(std::move(p));
            return;
        }
        int v = order[step];
        for (int u = 0; u < m; ++u) {
            if (used[u] || P.degree(u) != P.degree(v)) continue;
            bool ok = true;
            for (int t = 0; t < step; ++t) {
                int w = order[t];
                if (P.adjacent(v, w) != P.adjacent(u, map_to[w])) { ok = false; break; }
            }
            if (!ok) continue;
            map_to[v] = u;
            used[u] = true;
            self(self, step + 1);
            used[u] = false;
            map_to[v] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Isomorphism test between two facet-adjacency graphs (used by tests).
inline bool graphs_isomorphic(const Polytope& A, const Polytope& B) {
    if (A.facet_count != B.facet_count) return false;
    const int m = A.facet_count;
    std::vector<int> da, db;
    for (int i = 0; i < m; ++i) da.push_back(A.degree(i));
    for (int i = 0; i < m; ++i) db.push_back(B.degree(i));
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> order;
    {
        std::vector<bool> placed(m, false);
        for (int step = 0; step < m; ++step) {
            int best = -1, best_cnt = -1;
            for (int v = 0; v < m; ++v) {
                if (placed[v]) continue;
                int cnt = 0;
                for (int u : A.neighbors(v))
                    if (placed[u]) ++cnt;
                if (cnt > best_cnt) { best = v; best_cnt = cnt; }
            }
            order.push_back(best);
            placed[best] = true;
        }
    }
    std::vector<int> map_to(m, -1);
    std::vector<bool> used(m, false);
    auto rec = [&](auto&& self, int step) -> bool {
        if (step == m) return true;
        int v = order[step];
        for (int u = 0; u < m; ++u) {
            if (used[u] || da[v] != db[u]) continue;
            bool ok = true;
            for (int t = 0; t < step; ++t) {
                int w = order[t];
                if (A.adjacent(v, w) != B.adjacent(u, map_to[w])) { ok = false; break; }
            }
            if (!ok) continue;
            map_to[v] = u;
            used[u] = true;
            if (self(self, step + 1)) return true;
            used[u] = false;
            map_to[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

// Group cache: one permutation per line, 1-based image rows, sorted.
inline void export_group(const std::vector<FacetPermutation>& group, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& p : group) {
        for (size_t i = 0; i < p.images.size(); ++i)
            os << p.images[i] + 1 << (i + 1 == p.images.size() ? "" : " ");
        os << "\n";
    }
}

inline std::vector<FacetPermutation> import_group(const std::string& path, int m) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::vector<FacetPermutation> group;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        FacetPermutation p;
        p.images.reserve(m);
        int x;
        while (ls >> x) p.images.push_back(x - 1);
        if (static_cast<int>(p.images.size()) != m)
            throw std::runtime_error("group file: wrong row length");
        group.push_back(std::move(p));
    }
    return group;
}

}  // namespace smallcover
