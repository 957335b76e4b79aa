#include "weylcurrents/root_system.hpp"

#include <doctest.h>

#include <numeric>

using namespace weylcurrents;

TEST_CASE("root counts and dual Coxeter numbers") {
    struct Row {
        const char* type;
        std::size_t roots;
        int hv;
    };
    for (auto r : {Row{"A1", 1, 2}, Row{"A2", 3, 3}, Row{"A4", 10, 5}, Row{"D4", 12, 6}, Row{"D5", 20, 8},
                   Row{"E6", 36, 12}, Row{"E7", 63, 18}, Row{"E8", 120, 30}}) {
        CAPTURE(r.type);
        const auto rs = build_root_system(r.type);
        CHECK(rs.positive_roots.size() == r.roots);
        CHECK(rs.dual_coxeter == r.hv);
        CHECK(rs.rho == Weight(rs.rank, 1));
        CHECK(inner(rs, rs.highest_root, rs.highest_root) == Rational(2));
        CHECK(is_dominant(rs.highest_root));
    }
}

TEST_CASE("bad types are rejected") {
    CHECK_THROWS_AS(build_root_system("B2"), RootSystemError);
    CHECK_THROWS_AS(build_root_system("D3"), RootSystemError);
    CHECK_THROWS_AS(build_root_system("E9"), RootSystemError);
    CHECK_THROWS_AS(build_root_system("A"), RootSystemError);
    CHECK_THROWS_AS(build_root_system("A1x"), RootSystemError);
}

TEST_CASE("Weyl dimension agrees with Freudenthal") {
    CHECK(weyl_dimension(build_root_system("A2"), {1, 1}) == 8);
    CHECK(weyl_dimension(build_root_system("D4"), {0, 1, 0, 0}) == 28);
    CHECK(weyl_dimension(build_root_system("E6"), {1, 0, 0, 0, 0, 0}) == 27);
    CHECK(weyl_dimension(build_root_system("E8"), {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
    for (const char* t : {"A1", "A2", "A3", "D4"}) {
        const auto rs = build_root_system(t);
        Weight lam(rs.rank, 0);
        for (int i = 0; i < rs.rank; ++i) {
            lam.assign(rs.rank, 0);
            lam[i] = 2;
            if (i + 1 < rs.rank) lam[i + 1] = 1;
            std::int64_t total = 0;
            for (const auto& [w, m] : freudenthal_weights(rs, lam)) total += m;
            CAPTURE(t);
            CAPTURE(weight_to_string(lam));
            CHECK(total == weyl_dimension(rs, lam));
        }
    }
}

TEST_CASE("Weyl group orders") {
    CHECK(weyl_group_elements(build_root_system("A2")).size() == 6);
    CHECK(weyl_group_elements(build_root_system("A3")).size() == 24);
    CHECK(weyl_group_elements(build_root_system("D4")).size() == 192);
}

TEST_CASE("root lattice and dot action") {
    const auto a2 = build_root_system("A2");
    CHECK(in_root_lattice(a2, {1, 1}));
    CHECK_FALSE(in_root_lattice(a2, {1, 0}));
    CHECK(in_root_lattice(a2, {3, 0}));
    Weight out;
    int sign = 0;
    CHECK_FALSE(dot_dominant(a2, {-1, 0}, out, sign));
    REQUIRE(dot_dominant(a2, {-2, 1}, out, sign));
    CHECK(out == Weight{0, 0});
    CHECK(sign == -1);
    const auto d = dominant_rep(a2, {-1, 0});
    CHECK(d.weight == Weight{0, 1});
}

TEST_CASE("inner product is W-invariant") {
    const auto rs = build_root_system("D4");
    const Weight a{1, -2, 3, 0}, b{0, 1, -1, 2};
    for (int i = 1; i <= 4; ++i) CHECK(inner(rs, reflect(rs, i, a), reflect(rs, i, b)) == inner(rs, a, b));
}

TEST_CASE("reflections, inner products and dominance on small examples") {
    const auto a1 = build_root_system("A1");
    const auto a2 = build_root_system("A2");
    CHECK(reflect(a1, 1, {1}) == Weight{-1});
    CHECK(reflect(a2, 2, {1, 0}) == Weight{1, 0});
    CHECK(reflect(a2, 1, reflect(a2, 1, {1, 1})) == Weight{1, 1});
    CHECK(inner(a1, {1}, {1}) == Rational(1, 2));
    CHECK(inner(a1, {2}, {2}) == Rational(2));
    CHECK(inner(a2, {1, 0}, {0, 1}) == Rational(1, 3));
    CHECK(dominance_leq(a1, {0}, {2}));
    CHECK(dominance_leq(a2, {0, 0}, {1, 1}));
    CHECK_FALSE(dominance_leq(a2, {1, 0}, {0, 1}));
    CHECK_FALSE(dominance_leq(a1, {2}, {0}));
}
