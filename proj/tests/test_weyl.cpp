#include <catch2/catch_amalgamated.hpp>

#include "qcat/weyl.hpp"

using namespace qcat;

TEST_CASE("root system data") {
    RootSystemData b2 = weyl_b2();
    CHECK(b2.f == 2);
    CHECK(b2.c == 2);
    CHECK(b2.degrees == std::vector<long long>{2, 4});
    RootSystemData g2 = weyl_g2();
    CHECK(g2.f == 1);
    CHECK(g2.c == 6);
    RootSystemData a3 = weyl_type_a(4);
    CHECK(a3.f == 4);  // det of the A_3 Cartan matrix
    CHECK(a3.c == 1);
}

TEST_CASE("weyl tilted height") {
    RootSystemData b2 = weyl_b2();
    CHECK(weyl_tilted_height(b2, {1, 0}) == 2);
    CHECK(weyl_tilted_height(b2, {0, 1}) == 2);
    CHECK(weyl_tilted_height(b2, {0, 0}) == 0);
    RootSystemData g2 = weyl_g2();
    CHECK(weyl_tilted_height(g2, {1, 0}) == 2);
    CHECK(weyl_tilted_height(g2, {0, 1}) == 6);
}

TEST_CASE("weyl root membership") {
    RootSystemData b2 = weyl_b2();
    CHECK(!weyl_is_root_point(b2, {1, 0}));
    CHECK(weyl_is_root_point(b2, {2, 0}));
    CHECK(weyl_is_root_point(b2, {0, 1}));  // w_2 = a_1 + a_2
    // x_1 even characterizes the B2 root lattice
    for (int x1 = -4; x1 <= 4; ++x1)
        for (int x2 = -4; x2 <= 4; ++x2)
            CHECK(weyl_is_root_point(b2, {x1, x2}) == (x1 % 2 == 0));
    RootSystemData g2 = weyl_g2();
    for (int x1 = -3; x1 <= 3; ++x1)
        for (int x2 = -3; x2 <= 3; ++x2) CHECK(weyl_is_root_point(g2, {x1, x2}));
}

TEST_CASE("weyl simplex enumeration") {
    RootSystemData b2 = weyl_b2();
    // marks (1,2): points with x1 + 2 x2 <= b
    auto pts = weyl_enum_simplex(b2, 2);
    CHECK(pts == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {2, 0}});
}

TEST_CASE("weyl q-catalan and the identity suite") {
    RootSystemData b2 = weyl_b2();
    for (long long b : {1LL, 3LL, 5LL, 7LL, 9LL}) {
        LaurentPoly expected =
            exact_div(q_int(b + 1) * q_int(b + 3), q_int(2) * q_int(4));
        CHECK(weyl_cat_q(b2, b) == expected);
        WeylReport rep = verify_weyl(b2, b);
        CHECK(rep.heights_match);
        CHECK(rep.counts_match);
        CHECK(rep.fq_checked);
        CHECK(rep.fq_match);  // f(q) = 1 + q^2
        CHECK(rep.ok());
    }
    RootSystemData g2 = weyl_g2();
    for (long long b : {1LL, 5LL, 7LL, 11LL}) {
        LaurentPoly expected =
            exact_div(q_int(b + 1) * q_int(b + 5), q_int(2) * q_int(6));
        CHECK(weyl_cat_q(g2, b) == expected);
        WeylReport rep = verify_weyl(g2, b);
        CHECK(rep.ok());
        CHECK(rep.f_q_divides);
        CHECK(rep.f_q == LaurentPoly::one());  // f = 1: lattices coincide
    }
    CHECK_THROWS_AS(weyl_cat_q(b2, 2), NotCoprime);
    CHECK_THROWS_AS(verify_weyl(g2, 3), NotCoprime);
}

TEST_CASE("weyl counting formulas") {
    RootSystemData b2 = weyl_b2();
    for (long long b : {1LL, 3LL, 5LL, 7LL}) {
        BigInt roots = 0, all = 0;
        for (const auto& p : weyl_enum_simplex(b2, b)) {
            all += 1;
            if (weyl_is_root_point(b2, p)) roots += 1;
        }
        CHECK(roots * 8 == BigInt(b + 1) * (b + 3));
        CHECK(all * 8 == BigInt(2) * (b + 1) * (b + 3));
        CHECK(weyl_cat_q(b2, b).eval_at_one() == roots);
    }
}

TEST_CASE("type A instantiation agrees with the dedicated machinery") {
    for (int a = 2; a <= 4; ++a) {
        RootSystemData sys = weyl_type_a(a);
        for (long long b = 1; b <= 7; ++b) {
            auto weyl_pts = weyl_enum_simplex(sys, b);
            auto lattice_pts = enumerate(a, Region::simplex(b));
            CHECK(weyl_pts == lattice_pts);
            for (const auto& p : weyl_pts) {
                CHECK(weyl_tilted_height(sys, p) == tilted_height(p));
                CHECK(weyl_is_root_point(sys, p) == is_root_point(a, p));
            }
            if (std::gcd<long long>(a, b) == 1) {
                CHECK(weyl_cat_q(sys, b) == cat_q(a, b));
                WeylReport rep = verify_weyl(sys, b);
                // Counting formulas transfer to type A; the tilted height is
                // NOT a Johnson statistic there (a = 2 aside), so
                // heights_match is reported but not asserted.
                CHECK(rep.counts_match);
                if (a == 2) CHECK(rep.heights_match);
            }
        }
    }
}
