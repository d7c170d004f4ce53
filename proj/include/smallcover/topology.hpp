#pragma once

// Homological invariants of small covers and their double covers: clique
// complexes of induced adjacency graphs, exact reduced Betti numbers over
// the rationals and over Z2, the row-space summation formula for manifold
// Betti numbers, h-vector mod-2 Betti numbers, and intersection-form
// reports.

#include "smallcover/coloring.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace smallcover {

enum class Field { rationals, mod2 };

struct BettiTable {
    Field field = Field::rationals;
    std::vector<long long> betti;  // beta_0 .. beta_n
};

inline long long euler_characteristic(const BettiTable& t) {
    long long chi = 0;
    for (size_t i = 0; i < t.betti.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * t.betti[i];
    return chi;
}

// Clique complex of the adjacency graph induced on a facet subset; vertex
// labels are kept global, simplices use local indices.
struct SimplicialComplex {
    int max_dim = 0;                                    // highest simplex dimension
    std::vector<int> vertices;                          // global labels, sorted
    std::vector<std::vector<std::vector<int>>> faces;   // faces[k] = k-simplices

    bool empty() const { return vertices.empty(); }
    long long face_count(int k) const {
        if (k < 0 || k > max_dim) return 0;
        return static_cast<long long>(faces[k].size());
    }
};

inline SimplicialComplex full_subcomplex(const Polytope& P, std::vector<int> omega) {
    std::sort(omega.begin(), omega.end());
    omega.erase(std::unique(omega.begin(), omega.end()), omega.end());
    SimplicialComplex K;
    K.max_dim = P.dimension - 1;
    K.vertices = omega;
    K.faces.assign(K.max_dim + 1, {});
    const int nv = static_cast<int>(omega.size());
    for (int i = 0; i < nv; ++i) K.faces[0].push_back({i});
    // extend cliques in local label order
    std::vector<std::vector<int>> cur = K.faces[0];
    for (int k = 1; k <= K.max_dim; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& c : cur)
            for (int v = c.back() + 1; v < nv; ++v) {
                bool ok = true;
                for (int u : c)
                    if (!P.adjacent(omega[u], omega[v])) { ok = false; break; }
                if (!ok) continue;
                auto e = c;
                e.push_back(v);
                next.push_back(std::move(e));
            }
        K.faces[k] = next;
        cur = std::move(next);
    }
    return K;
}

// Connected components by traversal; the independent oracle for reduced
// zeroth Betti numbers.
inline std::vector<std::vector<int>> components(const Polytope& P, const SimplicialComplex& K) {
    const int nv = static_cast<int>(K.vertices.size());
    std::vector<int> comp(nv, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < nv; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack = {s}, group;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            group.push_back(K.vertices[v]);
            for (int u = 0; u < nv; ++u)
                if (comp[u] < 0 && P.adjacent(K.vertices[v], K.vertices[u])) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        std::sort(group.begin(), group.end());
        out.push_back(std::move(group));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Exact rank of a sparse integer matrix.  Row operations only, with per-row
// content removal; pivots prefer unit entries and low fill, so entries stay
// tiny on boundary matrices while remaining exact in general.
class SparseIntRank {
public:
    using Entry = std::pair<int, Int>;  // column, value

    void add_row(std::vector<Entry> row) { rows_.push_back(std::move(row)); }

    int rank() {
        int r = 0;
        while (true) {
            int pr = pick_pivot_row();
            if (pr < 0) break;
            ++r;
            auto prow = std::move(rows_[pr]);
            rows_[pr] = rows_.back();
            rows_.pop_back();
            int pcol = best_pivot_col(prow);
            Int pval = value_at(prow, pcol);
            for (auto& row : rows_) {
                Int a = value_at(row, pcol);
                if (a == 0) continue;
                row = combine(pval, row, a, prow, pcol);
                normalize(row);
            }
        }
        return r;
    }

private:
    std::vector<std::vector<Entry>> rows_;

    int pick_pivot_row() const {
        int best = -1;
        size_t best_n = SIZE_MAX;
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].empty()) continue;
            if (rows_[i].size() < best_n) {
                best = static_cast<int>(i);
                best_n = rows_[i].size();
            }
        }
        return best;
    }

    static int best_pivot_col(const std::vector<Entry>& row) {
        for (const auto& [c, v] : row)
            if (v == 1 || v == -1) return c;
        return row.front().first;
    }

    static Int value_at(const std::vector<Entry>& row, int col) {
        for (const auto& [c, v] : row)
            if (c == col) return v;
        return Int(0);
    }

    // p*row - a*prow with the pivot column cancelled exactly
    static std::vector<Entry> combine(const Int& p, const std::vector<Entry>& row, const Int& a,
                                      const std::vector<Entry>& prow, int pcol) {
        std::vector<Entry> out;
        out.reserve(row.size() + prow.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < prow.size()) {
            int ci = i < row.size() ? row[i].first : INT32_MAX;
            int cj = j < prow.size() ? prow[j].first : INT32_MAX;
            if (ci < cj) {
                out.emplace_back(ci, p * row[i].second);
                ++i;
            } else if (cj < ci) {
                out.emplace_back(cj, -a * prow[j].second);
                ++j;
            } else {
                Int v = p * row[i].second - a * prow[j].second;
                if (v != 0 && ci != pcol) out.emplace_back(ci, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    static void normalize(std::vector<Entry>& row) {
        if (row.empty()) return;
        Int g = 0;
        for (const auto& [c, v] : row) {
            g = boost::multiprecision::gcd(g, v);
            if (g < 0) g = -g;
            if (g == 1) return;
        }
        if (g > 1)
            for (auto& [c, v] : row) v /= g;
    }
};

// Rank over Z2 with bitset rows.
class SparseBitRank {
public:
    explicit SparseBitRank(int cols) : words_((cols + 63) / 64) {}
    void add_row(const std::vector<int>& cols) {
        std::vector<uint64_t> row(words_, 0);
        for (int c : cols) row[c / 64] ^= uint64_t(1) << (c % 64);
        rows_.push_back(std::move(row));
    }
    int rank() {
        int r = 0;
        std::vector<std::vector<uint64_t>> basis;
        std::vector<int> lead;
        for (auto& row : rows_) {
            while (true) {
                int l = leading(row);
                if (l < 0) break;
                bool reduced = false;
                for (size_t b = 0; b < basis.size(); ++b)
                    if (lead[b] == l) {
                        for (size_t w = 0; w < row.size(); ++w) row[w] ^= basis[b][w];
                        reduced = true;
                        break;
                    }
                if (!reduced) {
                    basis.push_back(row);
                    lead.push_back(l);
                    ++r;
                    break;
                }
            }
        }
        return r;
    }

private:
    size_t words_;
    std::vector<std::vector<uint64_t>> rows_;
    static int leading(const std::vector<uint64_t>& row) {
        for (size_t w = 0; w < row.size(); ++w)
            if (row[w]) return static_cast<int>(w * 64 + std::countr_zero(row[w]));
        return -1;
    }
};

// Rank of the boundary map from k-simplices to (k-1)-simplices.
inline int boundary_rank(const SimplicialComplex& K, int k, Field field) {
    if (k < 1 || k > K.max_dim) return 0;
    const auto& high = K.faces[k];
    const auto& low = K.faces[k - 1];
    if (high.empty() || low.empty()) return 0;

    std::unordered_map<uint64_t, int> low_index;
    auto face_key = [](const std::vector<int>& f) {
        uint64_t h = 0;
        for (int v : f) h = h * 1000003u + static_cast<uint64_t>(v + 1);
        return h;
    };
    low_index.reserve(low.size() * 2);
    for (size_t i = 0; i < low.size(); ++i) low_index.emplace(face_key(low[i]), static_cast<int>(i));

    if (field == Field::mod2) {
        SparseBitRank ranker(static_cast<int>(low.size()));
        std::vector<int> cols;
        for (const auto& f : high) {
            cols.clear();
            std::vector<int> sub(f.begin() + 1, f.end());
            for (size_t drop = 0; drop <= f.size() - 1; ++drop) {
                cols.push_back(low_index.at(face_key(sub)));
                if (drop + 1 < f.size()) sub[drop] = f[drop];
            }
            ranker.add_row(cols);
        }
        return ranker.rank();
    }
    SparseIntRank ranker;
    for (const auto& f : high) {
        std::vector<SparseIntRank::Entry> row;
        std::vector<int> sub(f.begin() + 1, f.end());
        for (size_t drop = 0; drop <= f.size() - 1; ++drop) {
            row.emplace_back(low_index.at(face_key(sub)), (drop % 2 == 0) ? Int(1) : Int(-1));
            if (drop + 1 < f.size()) sub[drop] = f[drop];
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        ranker.add_row(std::move(row));
    }
    return ranker.rank();
}

}  // namespace detail

// Reduced Betti number of a clique complex via exact boundary ranks.  The
// empty complex is handled by the caller's beta^{-1} convention.
inline long long reduced_betti(const SimplicialComplex& K, int i, Field field) {
    if (K.empty()) return 0;
    if (i < 0 || i > K.max_dim) return 0;
    long long ni = K.face_count(i);
    long long ri = detail::boundary_rank(K, i, field);
    long long ri1 = detail::boundary_rank(K, i + 1, field);
    long long beta = ni - ri - ri1;
    if (i == 0) beta -= 1;
    return beta;
}

// One element of the Z2 row space: the combination and the facet support of
// the corresponding functional.
struct RowSpaceElement {
    uint32_t combo = 0;             // which rows were summed
    std::vector<int> support;       // facets with odd pairing, 0-based
};

inline std::vector<RowSpaceElement> row_space(const CharacteristicMatrix& M) {
    std::vector<RowSpaceElement> out;
    out.reserve(size_t(1) << M.rows);
    for (uint32_t combo = 0; combo < (uint32_t(1) << M.rows); ++combo) {
        RowSpaceElement e;
        e.combo = combo;
        for (size_t j = 0; j < M.cols.size(); ++j)
            if (std::popcount(static_cast<unsigned>(combo & M.cols[j])) % 2 == 1)
                e.support.push_back(static_cast<int>(j));
        out.push_back(std::move(e));
    }
    return out;
}

// Manifold Betti number as the row-space sum of reduced subcomplex Betti
// numbers; rational coefficients (Z2 Betti numbers come from the h-vector).
inline long long betti_choi_park(const Polytope& P, const CharacteristicMatrix& M, int p,
                                 Field field = Field::rationals) {
    if (field == Field::mod2)
        throw std::invalid_argument("betti_choi_park: use mod2_betti_from_hvector for Z2");
    long long total = 0;
    for (const auto& e : row_space(M)) {
        if (e.support.empty()) {
            total += (p == 0) ? 1 : 0;
            continue;
        }
        SimplicialComplex K = full_subcomplex(P, e.support);
        total += reduced_betti(K, p - 1, field);
    }
    return total;
}

inline BettiTable rational_betti_table(const Polytope& P, const CharacteristicMatrix& M) {
    BettiTable t;
    t.field = Field::rationals;
    for (int p = 0; p <= P.dimension; ++p) t.betti.push_back(betti_choi_park(P, M, p));
    return t;
}

// h-vector of the dual boundary sphere from the clique counts; h_i equals
// the i-th mod-2 Betti number of any small cover over the polytope.
inline BettiTable mod2_betti_from_hvector(const Polytope& P) {
    const int n = P.dimension;
    std::vector<long long> f(n + 1);  // f[i] = number of i-cliques, f[0] = 1
    f[0] = 1;
    for (int k = 1; k <= n; ++k) f[k] = P.clique_count(k);
    auto binom = [](long long a, long long b) {
        if (b < 0 || b > a) return 0ll;
        long long r = 1;
        for (long long t = 0; t < b; ++t) r = r * (a - t) / (t + 1);
        return r;
    };
    BettiTable t;
    t.field = Field::mod2;
    for (int k = 0; k <= n; ++k) {
        long long h = 0;
        for (int i = 0; i <= k; ++i) {
            long long term = binom(n - i, k - i) * f[i];
            h += ((k - i) % 2 == 0) ? term : -term;
        }
        t.betti.push_back(h);
    }
    return t;
}

struct IntersectionForm {
    long long rank = 0;                 // rational beta_2
    long long hyperbolic_summands = 0;  // rank / 2 copies of the hyperbolic plane
};

// Even, signature-zero intersection form of an orientable small cover or
// extension double cover; reported as beta_2 / 2 hyperbolic planes.
inline IntersectionForm intersection_form_report(const Polytope& P,
                                                 const CharacteristicMatrix& M) {
    if (M.rows == P.dimension) {
        // a small cover: orientable iff all (normalized) columns have odd weight
        for (uint8_t c : M.cols)
            if (std::popcount(static_cast<unsigned>(c)) % 2 == 0)
                throw std::invalid_argument("intersection_form_report: non-orientable input");
    }
    IntersectionForm form;
    form.rank = betti_choi_park(P, M, 2);
    if (form.rank % 2 != 0)
        throw std::runtime_error("intersection_form_report: odd beta_2 contradicts evenness");
    form.hyperbolic_summands = form.rank / 2;
    return form;
}

inline IntersectionForm intersection_form_report(const Polytope& P, const ColoringVector& v) {
    if (!is_orientable(P, v))
        throw std::invalid_argument("intersection_form_report: non-orientable input");
    auto M = CharacteristicMatrix::from_coloring(P, gl_normalize(P, v));
    return intersection_form_report(P, M);
}

}  // namespace smallcover
