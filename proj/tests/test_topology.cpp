#include <catch2/catch_amalgamated.hpp>

#include "smallcover/polytope.hpp"
#include "smallcover/reference_vectors.hpp"
#include "smallcover/topology.hpp"

#include <random>

using namespace smallcover;

static const Polytope& cell() {
    static const Polytope P = build_120cell();
    return P;
}

static ColoringVector ref(int i) { return decode_hex(kReferenceVectors[i - 1], cell()); }

TEST_CASE("full subcomplexes") {
    SimplicialComplex empty = full_subcomplex(cell(), {});
    CHECK(empty.empty());

    SimplicialComplex point = full_subcomplex(cell(), {0});
    CHECK(point.face_count(0) == 1);
    for (int i = 0; i <= 3; ++i) CHECK(reduced_betti(point, i, Field::rationals) == 0);

    // a block is a cone over the center facet: contractible
    SimplicialComplex cone = full_subcomplex(cell(), cell().block(0));
    CHECK(reduced_betti(cone, 0, Field::rationals) == 0);
    CHECK(reduced_betti(cone, 1, Field::rationals) == 0);

    // the whole boundary complex is a 3-sphere
    std::vector<int> all(120);
    for (int i = 0; i < 120; ++i) all[i] = i;
    SimplicialComplex sphere = full_subcomplex(cell(), all);
    CHECK(sphere.face_count(0) == 120);
    CHECK(sphere.face_count(1) == 720);
    CHECK(sphere.face_count(2) == 1200);
    CHECK(sphere.face_count(3) == 600);
    CHECK(reduced_betti(sphere, 0, Field::rationals) == 0);
    CHECK(reduced_betti(sphere, 1, Field::rationals) == 0);
    CHECK(reduced_betti(sphere, 2, Field::rationals) == 0);
    CHECK(reduced_betti(sphere, 3, Field::rationals) == 1);
}

TEST_CASE("component counts agree with boundary ranks") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> facet(0, 119), size(3, 40);
    for (int t = 0; t < 25; ++t) {
        std::vector<int> omega;
        int target = size(rng);
        for (int s = 0; s < target; ++s) omega.push_back(facet(rng));
        SimplicialComplex K = full_subcomplex(cell(), omega);
        long long by_rank = reduced_betti(K, 0, Field::rationals);
        long long by_traversal = static_cast<long long>(components(cell(), K).size()) - 1;
        CHECK(by_rank == by_traversal);
        CHECK(reduced_betti(K, 0, Field::mod2) == by_traversal);
    }
}

TEST_CASE("row spaces") {
    auto M59 = CharacteristicMatrix::from_coloring(cell(), ref(59));
    auto rs = row_space(M59);
    CHECK(rs.size() == 16);
    int nontrivial = 0;
    for (const auto& e : rs)
        if (!e.support.empty()) ++nontrivial;
    CHECK(nontrivial == 15);

    auto d59 = z25_extension(cell(), ref(59));
    auto rs5 = row_space(d59);
    CHECK(rs5.size() == 32);
    nontrivial = 0;
    for (const auto& e : rs5)
        if (!e.support.empty()) ++nontrivial;
    CHECK(nontrivial == 31);

    // zero combination gives the empty support
    CHECK(rs[0].combo == 0);
    CHECK(rs[0].support.empty());
}

TEST_CASE("first Betti numbers of the four double covers") {
    std::vector<long long> expected = {51, 51, 115, 51};
    std::vector<std::vector<long long>> expected_multisets = {
        {7, 7, 7, 7, 23}, {7, 7, 7, 7, 23}, {23, 23, 23, 23, 23}, {7, 7, 7, 7, 23}};
    for (int t = 0; t < 4; ++t) {
        auto delta = z25_extension(cell(), ref(57 + t));
        CHECK(betti_choi_park(cell(), delta, 1) == expected[t]);

        std::vector<long long> contributions;
        for (const auto& e : row_space(delta)) {
            if (e.support.empty()) continue;
            SimplicialComplex K = full_subcomplex(cell(), e.support);
            long long b0 = reduced_betti(K, 0, Field::rationals);
            if (b0 > 0) contributions.push_back(b0);
        }
        std::sort(contributions.begin(), contributions.end());
        CHECK(contributions == expected_multisets[t]);
    }
}

TEST_CASE("the 36-facet subcomplex of the nine-coloring extension") {
    // the row-space element of delta_60 with this support splits into eight
    // components: six isolated facets and two 15-facet groups
    std::vector<int> support_1based = {9,  10, 11, 18, 20, 26, 35,  37,  39,  46,  48,  49,
                                       50, 52, 56, 57, 58, 59, 61,  63,  64,  66,  67,  68,
                                       73, 74, 75, 76, 78, 82, 89,  91,  103, 112, 118, 119};
    std::vector<int> support;
    for (int f : support_1based) support.push_back(f - 1);

    auto delta = z25_extension(cell(), ref(60));
    bool found = false;
    for (const auto& e : row_space(delta)) {
        if (e.support == support) { found = true; break; }
    }
    CHECK(found);

    SimplicialComplex K = full_subcomplex(cell(), support);
    auto comps = components(cell(), K);
    REQUIRE(comps.size() == 8);
    CHECK(reduced_betti(K, 0, Field::rationals) == 7);

    std::vector<std::vector<int>> expected = {
        {9}, {10}, {11}, {112}, {118}, {119},
        {18, 20, 26, 48, 49, 57, 59, 61, 64, 66, 68, 74, 76, 78, 82},
        {35, 37, 39, 46, 50, 52, 56, 58, 63, 67, 73, 75, 89, 91, 103}};
    for (auto& grp : expected)
        for (auto& f : grp) --f;
    std::sort(expected.begin(), expected.end());
    CHECK(comps == expected);
}

TEST_CASE("small cover Betti numbers vanish in degree one") {
    for (int i : {1, 30, 56, 57, 58, 59, 60}) {
        auto M = CharacteristicMatrix::from_coloring(cell(), ref(i));
        CHECK(betti_choi_park(cell(), M, 0) == 1);
        CHECK(betti_choi_park(cell(), M, 1) == 0);
    }
}

TEST_CASE("mod-2 Betti numbers from the h-vector") {
    BettiTable t120 = mod2_betti_from_hvector(cell());
    CHECK(t120.betti == std::vector<long long>{1, 116, 366, 116, 1});
    long long sum = 0;
    for (long long h : t120.betti) sum += h;
    CHECK(sum == 600);  // vertex count of the 120-cell
    CHECK(euler_characteristic(t120) == 136);

    BettiTable t4 = mod2_betti_from_hvector(build_cube(4));
    CHECK(t4.betti == std::vector<long long>{1, 4, 6, 4, 1});
}

TEST_CASE("euler characteristic of betti tables") {
    BettiTable orientable{Field::rationals, {1, 0, 134, 0, 1}};
    CHECK(euler_characteristic(orientable) == 136);
    BettiTable cover{Field::rationals, {1, 115, 500, 115, 1}};
    CHECK(euler_characteristic(cover) == 272);
}

TEST_CASE("choi-park at p=0 counts only the empty support") {
    auto M = CharacteristicMatrix::from_coloring(cell(), ref(59));
    CHECK(betti_choi_park(cell(), M, 0) == 1);
}

TEST_CASE("intersection form of the first orientable cover") {
    auto form = intersection_form_report(cell(), ref(1));
    CHECK(form.rank == 134);
    CHECK(form.hyperbolic_summands == 67);
    CHECK_THROWS_AS(intersection_form_report(cell(), ref(59)), std::invalid_argument);
}

TEST_CASE("double cover Betti tables and duality") {
    // delta_59: (1,115,500,115,1); delta_57: (1,51,372,51,1)
    auto d59 = z25_extension(cell(), ref(59));
    BettiTable t59 = rational_betti_table(cell(), d59);
    CHECK(t59.betti == std::vector<long long>{1, 115, 500, 115, 1});
    CHECK(euler_characteristic(t59) == 272);
    auto form59 = intersection_form_report(cell(), d59);
    CHECK(form59.hyperbolic_summands == 250);

    auto d57 = z25_extension(cell(), ref(57));
    BettiTable t57 = rational_betti_table(cell(), d57);
    CHECK(t57.betti == std::vector<long long>{1, 51, 372, 51, 1});
    auto form57 = intersection_form_report(cell(), d57);
    CHECK(form57.hyperbolic_summands == 186);
}
