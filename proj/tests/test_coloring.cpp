#include <catch2/catch_amalgamated.hpp>

#include "smallcover/coloring.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/reference_vectors.hpp"

#include <random>
#include <set>

using namespace smallcover;

static const Polytope& cell() {
    static const Polytope P = build_120cell();
    return P;
}

static ColoringVector ref(int i) { return decode_hex(kReferenceVectors[i - 1], cell()); }

TEST_CASE("non-singularity on the square") {
    Polytope S = build_cube(2);
    CHECK(is_nonsingular(S, {1, 2, 1, 2}));
    CHECK(!is_nonsingular(S, {1, 2, 1, 1}));
    CHECK(is_nonsingular(S, {1, 2, 3, 2}));
}

TEST_CASE("published vectors decode and are non-singular") {
    for (int i = 1; i <= 60; ++i) {
        ColoringVector v = ref(i);
        CHECK(is_nonsingular(cell(), v));
    }
}

TEST_CASE("simplex admissibility criteria") {
    const Polytope& P = cell();
    // facet 4 (0-based) is adjacent to facets 0,1,2,3 among earlier ones:
    // block rows give F5 ~ F1, and F5 not adjacent to F2..F4
    ColoringVector partial(120, 0);
    partial[0] = 1;
    CHECK(!simplex_admissible(P, partial, 4, 1));   // 1-simplex: repeated color
    CHECK(simplex_admissible(P, partial, 4, 2));

    // triangle {0,1,2}: F1,F2,F3 mutually adjacent; color F1=1, F2=2, test F3
    ColoringVector tri(120, 0);
    tri[0] = 1;
    tri[1] = 2;
    CHECK(!simplex_admissible(P, tri, 2, 3));  // 3 = 1 xor 2 spans the 2-simplex
    CHECK(simplex_admissible(P, tri, 2, 4));

    // 4-clique {0,1,2,3} with colors 1,2,4 on the first three
    ColoringVector quad(120, 0);
    quad[0] = 1;
    quad[1] = 2;
    quad[2] = 4;
    CHECK(simplex_admissible(P, quad, 3, 8));
    CHECK(!simplex_admissible(P, quad, 3, 7));  // 7 = 1 xor 2 xor 4
}

TEST_CASE("orientability of published vectors") {
    // orientable class representatives use only odd-popcount colors
    CHECK(is_orientable(cell(), ref(1)));
    CHECK(is_orientable(cell(), ref(42)));
    CHECK(!is_orientable(cell(), ref(57)));
    CHECK(!is_orientable(cell(), ref(58)));
    CHECK(!is_orientable(cell(), ref(59)));  // contains color 15
    CHECK(!is_orientable(cell(), ref(60)));

    Polytope C = build_cube(3);
    CHECK(is_orientable(C, {1, 2, 4, 1, 2, 4}));
}

TEST_CASE("hex encoding") {
    ColoringVector v1 = ref(1);
    std::string first13(kReferenceVectors[0], 13);
    CHECK(first13 == "1248284bee77d");
    CHECK(encode_hex(v1) == kReferenceVectors[0]);
    CHECK(decode_hex(encode_hex(ref(59)), cell()) == ref(59));

    // the nine-coloring vector agrees with the five-coloring one on the
    // first 33 facets
    ColoringVector v59 = ref(59), v60 = ref(60);
    for (int i = 0; i < 33; ++i) CHECK(v59[i] == v60[i]);
    CHECK(v59 != v60);

    CHECK_THROWS(decode_hex("1240", build_cube(2)));     // '0' is not a color
    CHECK_THROWS(decode_hex("12g4", build_cube(2)));     // out of alphabet
    CHECK_THROWS(decode_hex("124", build_cube(2)));      // wrong length
    CHECK_THROWS(decode_hex("1211", build_cube(2), true));  // singular, validated
}

static ColoringVector apply_gl(const ColoringVector& v, const std::array<Color, 16>& g) {
    ColoringVector w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = g[v[i]];
    return w;
}

static std::array<Color, 16> random_gl4(std::mt19937& rng) {
    // random invertible 4x4 bit matrix as a color table
    std::uniform_int_distribution<int> val(1, 15);
    while (true) {
        Color b[4];
        for (auto& x : b) x = static_cast<Color>(val(rng));
        if (bit_rank(b, 4) != 4) continue;
        std::array<Color, 16> g{};
        for (int c = 1; c < 16; ++c)
            for (int i = 0; i < 4; ++i)
                if (c >> i & 1) g[c] ^= b[i];
        return g;
    }
}

TEST_CASE("gl_normalize is idempotent and constant on GL orbits") {
    std::mt19937 rng(123);
    for (int idx : {1, 57, 59, 60}) {
        ColoringVector v = ref(idx);
        CHECK(gl_normalize(cell(), v) == v);  // published vectors are normalized
        for (int t = 0; t < 50; ++t) {
            auto g = random_gl4(rng);
            CHECK(gl_normalize(cell(), apply_gl(v, g)) == v);
        }
    }
}

TEST_CASE("orientability is a GL-orbit invariant") {
    std::mt19937 rng(321);
    for (int idx : {1, 59}) {
        ColoringVector v = ref(idx);
        bool expected = is_orientable(cell(), v);
        for (int t = 0; t < 25; ++t)
            CHECK(is_orientable(cell(), apply_gl(v, random_gl4(rng))) == expected);
    }
}

TEST_CASE("basis swap normalization") {
    // a vector whose first colors are (2,1,4,8) normalizes by swapping bits
    Polytope C = build_cube(4);
    ColoringVector v = {2, 1, 4, 8, 2, 1, 4, 8};
    ColoringVector w = gl_normalize(C, v);
    CHECK(w == ColoringVector{1, 2, 4, 8, 1, 2, 4, 8});
}

TEST_CASE("added color representatives match the published classification") {
    std::vector<size_t> expected_counts = {3, 7, 16, 28, 35, 35, 28, 16, 7, 3, 1};
    for (int k = 5; k <= 15; ++k) {
        auto reps = added_color_representatives(k);
        CHECK(reps.size() == expected_counts[k - 5]);
    }

    auto k5 = added_color_representatives(5);
    REQUIRE(k5.size() == 3);
    CHECK(k5[0] == std::vector<Color>{3});
    CHECK(k5[1] == std::vector<Color>{7});
    CHECK(k5[2] == std::vector<Color>{15});

    auto k8 = added_color_representatives(8);
    CHECK(std::find(k8.begin(), k8.end(), std::vector<Color>{7, 11, 13, 14}) != k8.end());
    CHECK(std::find(k8.begin(), k8.end(), std::vector<Color>{3, 5, 9, 14}) != k8.end());
    CHECK(std::find(k8.begin(), k8.end(), std::vector<Color>{3, 5, 9, 15}) != k8.end());

    auto k15 = added_color_representatives(15);
    REQUIRE(k15.size() == 1);
    CHECK(k15[0] == std::vector<Color>{3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15});
}

TEST_CASE("Z2^5 extension") {
    auto d59 = z25_extension(cell(), ref(59));
    CHECK(d59.rows == 5);
    // all columns odd weight in Z2^5; odd-popcount colors keep the fifth bit 0
    ColoringVector v59 = ref(59);
    for (size_t j = 0; j < d59.cols.size(); ++j) {
        CHECK(std::popcount(static_cast<unsigned>(d59.cols[j])) % 2 == 1);
        if (std::popcount(static_cast<unsigned>(v59[j])) % 2 == 1)
            CHECK((d59.cols[j] & 16) == 0);
    }

    // rank 5: the five rows are independent over Z2
    auto row_of = [&](int r) {
        std::vector<int> bits;
        for (size_t j = 0; j < d59.cols.size(); ++j)
            if (d59.cols[j] >> r & 1) bits.push_back(static_cast<int>(j));
        return bits;
    };
    // simple independence check via distinct nonzero combinations
    std::set<std::vector<uint8_t>> combos;
    for (int mask = 0; mask < 32; ++mask) {
        std::vector<uint8_t> acc(d59.cols.size(), 0);
        for (size_t j = 0; j < d59.cols.size(); ++j)
            acc[j] = static_cast<uint8_t>(std::popcount(static_cast<unsigned>(mask & d59.cols[j])) % 2);
        combos.insert(acc);
    }
    CHECK(combos.size() == 32);
    (void)row_of;

    auto d60 = z25_extension(cell(), ref(60));
    CHECK(d60.rows == 5);

    CHECK_THROWS_AS(z25_extension(cell(), ref(1)), std::invalid_argument);  // orientable input
}
