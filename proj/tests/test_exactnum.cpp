#include <catch2/catch_amalgamated.hpp>

#include "smallcover/polytope.hpp"
#include "smallcover/quaternion.hpp"

#include <random>

using namespace smallcover;

static QuadraticRational random_qr(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

TEST_CASE("golden ratio identities") {
    QuadraticRational phi = golden_ratio();
    QuadraticRational one(1), two(2);

    CHECK(phi * (phi - one) == one);                 // phi * phi^{-1} = 1
    CHECK(phi * phi == phi + one);                   // phi^2 = phi + 1
    CHECK(golden_ratio_inverse() == phi - one);

    // (2 - phi) = phi^{-2}: expand (phi - 1)^2 symbolically and compare
    QuadraticRational phi_inv = golden_ratio_inverse();
    CHECK(two - phi == phi_inv * phi_inv);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(20240501);
    for (int t = 0; t < 200; ++t) {
        auto x = random_qr(rng), y = random_qr(rng), z = random_qr(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inverse() == QuadraticRational(1));
    }
    CHECK_THROWS_AS(QuadraticRational(0).inverse(), std::domain_error);
}

TEST_CASE("exact sign analysis") {
    QuadraticRational phi = golden_ratio();
    CHECK(phi.sign() == 1);
    CHECK((-phi).sign() == -1);
    CHECK(QuadraticRational(0).sign() == 0);
    // 9/4 - sqrt(5) > 0 but 2 - sqrt(5) < 0
    CHECK(QuadraticRational(Rational(9, 4), Rational(-1)).sign() == 1);
    CHECK(QuadraticRational(Rational(2), Rational(-1)).sign() == -1);
    CHECK(QuadraticRational(Rational(-2), Rational(1)).sign() == 1);
}

TEST_CASE("quaternion basis relations") {
    Quaternion i{QuadraticRational(0), QuadraticRational(1), QuadraticRational(0), QuadraticRational(0)};
    Quaternion j{QuadraticRational(0), QuadraticRational(0), QuadraticRational(1), QuadraticRational(0)};
    Quaternion k{QuadraticRational(0), QuadraticRational(0), QuadraticRational(0), QuadraticRational(1)};
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(i * i == -quaternion_one());

    QuadraticRational half(Rational(1, 2), Rational(0));
    Quaternion h{half, half, half, half};
    Quaternion expected{-half, half, half, half};
    CHECK(h * h == expected);
}

TEST_CASE("conjugation and norms on random quaternions") {
    std::mt19937 rng(77);
    auto rand_quat = [&] {
        return Quaternion{random_qr(rng), random_qr(rng), random_qr(rng), random_qr(rng)};
    };
    for (int t = 0; t < 100; ++t) {
        Quaternion p = rand_quat(), q = rand_quat();
        CHECK((p * q).conjugate() == q.conjugate() * p.conjugate());
        Quaternion nq = q * q.conjugate();
        CHECK(nq.w == q.norm_squared());
        CHECK(nq.x.is_zero());
        CHECK(nq.y.is_zero());
        CHECK(nq.z.is_zero());
        CHECK(q.norm_squared().sign() >= 0);
    }
}

TEST_CASE("facet centers are exact unit quaternions") {
    Polytope P = build_120cell();
    for (const auto& c : P.centers) CHECK(c.norm_squared() == QuadraticRational(1));
}

TEST_CASE("inner products between named centers") {
    Polytope P = build_120cell();
    QuadraticRational half(Rational(1, 2), Rational(0));
    CHECK(inner_product(P.centers[0], P.centers[0]) == QuadraticRational(1));
    CHECK(inner_product(P.centers[0], P.centers[1]) == golden_ratio() * half);
    CHECK(inner_product(P.centers[0], P.centers[119]) == QuadraticRational(-1));
}

TEST_CASE("multiplicative orders by layer") {
    Polytope P = build_120cell();
    CHECK(multiplicative_order(P.centers[0]) == 1);
    CHECK(multiplicative_order(P.centers[119]) == 2);
    CHECK(multiplicative_order(P.centers[1]) == 10);

    // the multiset of orders grouped by layer
    auto layer_partition = layers(P, 0);
    std::vector<int> expected = {1, 10, 6, 5, 4, 10, 3, 5, 2};
    REQUIRE(layer_partition.size() == 9);
    for (size_t l = 0; l < 9; ++l)
        for (int f : layer_partition[l].facets)
            CHECK(multiplicative_order(P.centers[f]) == expected[l]);

    Quaternion not_unit{QuadraticRational(2), QuadraticRational(0), QuadraticRational(0),
                        QuadraticRational(0)};
    CHECK_THROWS_AS(multiplicative_order(not_unit), std::domain_error);
}
