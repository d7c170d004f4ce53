#pragma once

// Z2^n colorings of facets: non-singularity, the simplex admissibility
// criteria driving the search, orientability, GL_n(Z2) normalisation, the
// hex vector text encoding, added-color orbit representatives, and the
// odd-weight Z2^5 extension of a non-orientable coloring.

#include "smallcover/polytope.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace smallcover {

using Color = uint8_t;                     // nonzero bit code of a Z2^n vector
using ColoringVector = std::vector<Color>;  // length m; 0 marks an uncolored slot

// Rank over Z2 of a list of bit codes.
inline int bit_rank(const Color* v, int count) {
    std::array<uint32_t, 8> basis{};
    int rank = 0;
    for (int t = 0; t < count; ++t) {
        uint32_t x = v[t];
        while (x) {
            int b = std::bit_width(x) - 1;
            if (basis[b]) {
                x ^= basis[b];
            } else {
                basis[b] = x;
                ++rank;
                break;
            }
        }
    }
    return rank;
}

// Non-singularity: the n colors at every vertex (n-clique) span Z2^n.
inline bool is_nonsingular(const Polytope& P, const ColoringVector& v) {
    const int n = P.dimension;
    std::array<Color, 8> buf{};
    for (const auto& clique : P.cliques(n)) {
        for (int t = 0; t < n; ++t) buf[t] = v[clique[t]];
        if (bit_rank(buf.data(), n) != n) return false;
    }
    return true;
}

// Admissibility of color c for facet i when facets 0..i-1 carry partial[];
// the 1-, 2- and 3-simplex criteria against already colored neighbours of i:
// c must avoid the span of the colors of every colored clique adjacent to i.
inline bool simplex_admissible(const Polytope& P, const ColoringVector& partial, int i, Color c) {
    if (c == 0) return false;
    std::vector<int> pre;
    for (int j : P.neighbors(i))
        if (j < i && partial[j] != 0) pre.push_back(j);
    for (size_t a = 0; a < pre.size(); ++a) {
        if (c == partial[pre[a]]) return false;
        for (size_t b = a + 1; b < pre.size(); ++b) {
            if (!P.adjacent(pre[a], pre[b])) continue;
            if (c == (partial[pre[a]] ^ partial[pre[b]])) return false;
            for (size_t d = b + 1; d < pre.size(); ++d) {
                if (!P.adjacent(pre[a], pre[d]) || !P.adjacent(pre[b], pre[d])) continue;
                if (c == (partial[pre[a]] ^ partial[pre[b]] ^ partial[pre[d]])) return false;
            }
        }
    }
    return true;
}

// The unique GL_n(Z2) image with the first n facets colored e_1..e_n.
// Requires those facets to be mutually adjacent with independent colors.
inline ColoringVector gl_normalize(const Polytope& P, const ColoringVector& v) {
    const int n = P.dimension;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!P.adjacent(i, j))
                throw std::invalid_argument("gl_normalize: first facets not mutually adjacent");
    // invert the basis matrix whose columns are the first n colors
    std::array<Color, 8> col{}, img{};
    for (int i = 0; i < n; ++i) {
        col[i] = v[i];
        img[i] = static_cast<Color>(1 << i);
    }
    for (int i = 0; i < n; ++i) {
        int pivot = -1;
        for (int r = i; r < n; ++r)
            if (col[r] >> i & 1) { pivot = r; break; }
        if (pivot < 0) throw std::invalid_argument("gl_normalize: first colors are dependent");
        std::swap(col[i], col[pivot]);
        std::swap(img[i], img[pivot]);
        for (int r = 0; r < n; ++r)
            if (r != i && (col[r] >> i & 1)) { col[r] ^= col[i]; img[r] ^= img[i]; }
    }
    // now col[i] = e_i and img[i] = g(e_i) for the transform g sending the
    // original basis colors to e_1..e_n; apply g columnwise
    std::array<Color, 32> table{};
    int codes = 1 << n;
    for (int c = 1; c < codes; ++c) {
        Color out = 0;
        for (int i = 0; i < n; ++i)
            if (c >> i & 1) out ^= img[i];
        table[c] = out;
    }
    ColoringVector w(v.size());
    for (size_t j = 0; j < v.size(); ++j) w[j] = v[j] ? table[v[j]] : 0;
    return w;
}

// Orientable iff the GL-normalized form uses only odd-popcount colors.
inline bool is_orientable(const Polytope& P, const ColoringVector& v) {
    ColoringVector w = gl_normalize(P, v);
    for (Color c : w)
        if (std::popcount(static_cast<unsigned>(c)) % 2 == 0) return false;
    return true;
}

// Hex vector text: one character per facet, digits 1-9 then a-f; '0' is
// not a color and is rejected.
inline std::string encode_hex(const ColoringVector& v) {
    std::string s;
    s.reserve(v.size());
    for (Color c : v) {
        if (c == 0 || c > 15) throw std::invalid_argument("encode_hex: color out of 1..15");
        s += static_cast<char>(c < 10 ? '0' + c : 'a' + (c - 10));
    }
    return s;
}

inline ColoringVector decode_hex(const std::string& text, const Polytope& P,
                                 bool validate_nonsingular = false) {
    if (static_cast<int>(text.size()) != P.facet_count)
        throw std::invalid_argument("decode_hex: wrong length");
    ColoringVector v(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        int c;
        if (ch >= '1' && ch <= '9') c = ch - '0';
        else if (ch >= 'a' && ch <= 'f') c = ch - 'a' + 10;
        else throw std::invalid_argument("decode_hex: bad character");
        v[i] = static_cast<Color>(c);
    }
    if (validate_nonsingular && !is_nonsingular(P, v))
        throw std::invalid_argument("decode_hex: vector is singular");
    return v;
}

// Orbit representatives of (k-4)-subsets of the 11 non-basis colors under
// the S4 action permuting the four bit coordinates; each representative is
// the lexicographically smallest sorted subset of its orbit.
inline std::vector<std::vector<Color>> added_color_representatives(int k) {
    if (k < 5 || k > 15) throw std::invalid_argument("added_color_representatives: k in 5..15");
    const int want = k - 4;
    std::vector<Color> pool;
    for (Color c = 1; c < 16; ++c)
        if (c != 1 && c != 2 && c != 4 && c != 8) pool.push_back(c);

    // the 24 bit-coordinate permutations as color maps
    std::vector<std::array<Color, 16>> maps;
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
        std::array<Color, 16> f{};
        for (int c = 0; c < 16; ++c) {
            Color out = 0;
            for (int b = 0; b < 4; ++b)
                if (c >> b & 1) out |= static_cast<Color>(1 << perm[b]);
            f[c] = out;
        }
        maps.push_back(f);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::vector<Color>> reps;
    std::vector<int> idx(want);
    for (int i = 0; i < want; ++i) idx[i] = i;
    while (true) {
        std::vector<Color> subset(want);
        for (int i = 0; i < want; ++i) subset[i] = pool[idx[i]];
        std::vector<Color> best = subset;
        for (const auto& f : maps) {
            std::vector<Color> im(want);
            for (int i = 0; i < want; ++i) im[i] = f[subset[i]];
            std::sort(im.begin(), im.end());
            if (im < best) best = im;
        }
        reps.insert(best);
        // next combination
        int pos = want - 1;
        while (pos >= 0 && idx[pos] == static_cast<int>(pool.size()) - want + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < want; ++i) idx[i] = idx[i - 1] + 1;
    }
    return {reps.begin(), reps.end()};
}

// k x m bit matrix; column j is the bit expansion of the j-th color.
struct CharacteristicMatrix {
    int rows = 0;
    std::vector<uint8_t> cols;  // packed column codes

    static CharacteristicMatrix from_coloring(const Polytope& P, const ColoringVector& v) {
        CharacteristicMatrix M;
        M.rows = P.dimension;
        M.cols.assign(v.begin(), v.end());
        return M;
    }
};

// Odd-weight completion: a fifth row marking the even-popcount columns, so
// every column of the 5 x m matrix has odd weight in Z2^5.  Requires a
// non-orientable input (otherwise the fifth row is identically zero).
inline CharacteristicMatrix z25_extension(const Polytope& P, const ColoringVector& v) {
    ColoringVector w = gl_normalize(P, v);
    CharacteristicMatrix M;
    M.rows = 5;
    M.cols.resize(w.size());
    bool any_even = false;
    for (size_t j = 0; j < w.size(); ++j) {
        bool even = std::popcount(static_cast<unsigned>(w[j])) % 2 == 0;
        any_even = any_even || even;
        M.cols[j] = static_cast<uint8_t>(w[j] | (even ? 16 : 0));
    }
    if (!any_even)
        throw std::invalid_argument("z25_extension: input is orientable, extension degenerate");
    return M;
}

}  // namespace smallcover
