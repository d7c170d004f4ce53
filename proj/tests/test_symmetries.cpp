#include <catch2/catch_amalgamated.hpp>

#include "smallcover/polytope.hpp"
#include "smallcover/symmetry.hpp"

#include <random>
#include <set>

using namespace smallcover;

static const Polytope& cell() {
    static const Polytope P = build_120cell();
    return P;
}

static const std::vector<FacetPermutation>& group() {
    static const auto G = symmetry_group_120cell(cell());
    return G;
}

TEST_CASE("group size and orientation split") {
    const auto& G = group();
    REQUIRE(G.size() == 14400);
    size_t preserving = 0, reversing = 0;
    for (const auto& p : G) {
        if (p.orientation == Orientation::preserving) ++preserving;
        if (p.orientation == Orientation::reversing) ++reversing;
    }
    CHECK(preserving == 7200);
    CHECK(reversing == 7200);

    FacetPermutation id = identity_permutation(120);
    CHECK(std::binary_search(G.begin(), G.end(), id));
}

TEST_CASE("every element preserves adjacency and layer sizes") {
    const auto& G = group();
    std::mt19937 rng(4242);
    std::uniform_int_distribution<size_t> pick(0, G.size() - 1);
    for (int t = 0; t < 40; ++t) {
        const auto& p = G[pick(rng)];
        CHECK(preserves_adjacency(cell(), p));
        // layer partition sizes relative to the image of facet 0
        auto part = layers(cell(), p.images[0]);
        std::vector<size_t> sizes;
        for (const auto& l : part) sizes.push_back(l.facets.size());
        CHECK(sizes == std::vector<size_t>{1, 12, 20, 12, 30, 12, 20, 12, 1});
    }
}

TEST_CASE("closure and orientation parity under composition") {
    const auto& G = group();
    std::mt19937 rng(99);
    std::uniform_int_distribution<size_t> pick(0, G.size() - 1);
    for (int t = 0; t < 1000; ++t) {
        const auto& a = G[pick(rng)];
        const auto& b = G[pick(rng)];
        FacetPermutation c = compose(a, b);
        auto it = std::lower_bound(G.begin(), G.end(), c);
        REQUIRE(it != G.end());
        REQUIRE(it->images == c.images);
        // parity multiplies: the stored flag of the found element must match
        CHECK(it->orientation == c.orientation);
    }
}

TEST_CASE("vertex stabilizer is S4 on the vertex facets") {
    const auto& G = group();
    std::vector<int> v = {0, 1, 2, 3};  // F1..F4 form a vertex
    auto stab = vertex_stabilizer(G, v);
    CHECK(stab.size() == 24);

    std::set<std::array<int, 4>> induced;
    for (const auto& p : stab)
        induced.insert({p.images[0], p.images[1], p.images[2], p.images[3]});
    CHECK(induced.size() == 24);  // all permutations of the four labels realized

    // identical order across other vertices
    const auto cliques = cell().cliques(4);
    std::mt19937 rng(7);
    std::uniform_int_distribution<size_t> pick(0, cliques.size() - 1);
    for (int t = 0; t < 5; ++t) CHECK(vertex_stabilizer(G, cliques[pick(rng)]).size() == 24);
}

TEST_CASE("transfer permutations") {
    const auto& G = group();
    auto T = transfer_permutations(G, 120);
    REQUIRE(T.size() == 120);
    CHECK(T[0].images == identity_permutation(120).images);

    auto b1 = cell().block(0);
    for (int i = 0; i < 120; ++i) {
        CHECK(T[i].images[0] == i);
        // the image of b1 is exactly b_i
        std::vector<int> image;
        for (int f : b1) image.push_back(T[i].images[f]);
        std::sort(image.begin(), image.end());
        CHECK(image == cell().block(i));
    }
}

TEST_CASE("cube symmetry groups") {
    CHECK(cube_symmetries(2).size() == 8);
    CHECK(cube_symmetries(3).size() == 48);
    CHECK(cube_symmetries(4).size() == 384);
    for (const auto& p : cube_symmetries(3)) CHECK(preserves_adjacency(build_cube(3), p));
}

TEST_CASE("graph automorphisms of small polytopes") {
    CHECK(graph_automorphisms(build_dodecahedron()).size() == 120);
    CHECK(graph_automorphisms(build_cube(2)).size() == 8);
    CHECK(graph_automorphisms(build_lobell(6)).size() == 24);
}

TEST_CASE("graph automorphisms of the 120-cell equal the quaternion group") {
    auto autos = graph_automorphisms(cell());
    REQUIRE(autos.size() == 14400);
    const auto& G = group();
    for (size_t i = 0; i < autos.size(); ++i) CHECK(autos[i].images == G[i].images);
}

TEST_CASE("group export and import round trip") {
    auto T = transfer_permutations(group(), 120);
    export_group(T, "transfer_cache.txt");
    auto back = import_group("transfer_cache.txt", 120);
    REQUIRE(back.size() == T.size());
    for (size_t i = 0; i < T.size(); ++i) CHECK(back[i].images == T[i].images);
}
