#include "weylcurrents/affine_weyl.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace weylcurrents;

TEST_CASE("simple reflections are involutions and s0 acts by the affine root") {
    for (const char* t : {"A1", "A2", "D4"}) {
        const auto rs = build_root_system(t);
        for (int i = 0; i <= rs.rank; ++i) {
            const auto s = affine_simple_reflection(rs, i);
            CHECK(compose(s, s) == affine_identity(rs));
            CHECK(length(rs, s) == 1);
            const AffineWeight lam{Weight(rs.rank, 1), 2, 0};
            CHECK(act_affine(rs, s, lam) == affine_reflect(rs, i, lam));
        }
    }
}

TEST_CASE("translation length and reduced word in A1") {
    const auto rs = build_root_system("A1");
    const auto t = translation_element(rs, {-2});
    CHECK(length(rs, t) == 2);
    CHECK(reduced_word(rs, t) == std::vector<int>{1, 0});
    CHECK_THROWS_AS(translation_element(rs, {1}), std::invalid_argument);
}

TEST_CASE("dot action at level one") {
    const auto rs = build_root_system("A1");
    const auto x = dot_k(rs, affine_simple_reflection(rs, 0), {{0}, 1, 0}, 1);
    CHECK(x == AffineWeight{{4}, 1, -2});
    CHECK(rho_shift(rs, 1).value == AffineWeight{{1}, 3, 0});
}

TEST_CASE("dominant dot representatives") {
    const auto rs = build_root_system("A1");
    CHECK_FALSE(dominant_dot_rep(rs, {2}, 1).has_value());
    const auto r = dominant_dot_rep(rs, {4}, 1);
    REQUIRE(r.has_value());
    CHECK(r->dominant == Weight{0});
    CHECK(r->sign == -1);
    CHECK(r->delta_shift == 2);
    const auto id = dominant_dot_rep(rs, {1}, 1);
    REQUIRE(id.has_value());
    CHECK(id->sign == 1);
    CHECK(id->delta_shift == 0);
    // the reported element really moves lambda there
    const auto img = dot_k(rs, r->element, {{4}, 1, 0}, 1);
    CHECK(img == AffineWeight{{0}, 1, 2});
}

namespace {

// Cayley graph distances from the identity, up to radius.
std::map<AffineWeylElement, int> bfs(const RootSystemData& rs, int radius) {
    std::map<AffineWeylElement, int> dist{{affine_identity(rs), 0}};
    std::vector<AffineWeylElement> frontier{affine_identity(rs)};
    for (int d = 1; d <= radius; ++d) {
        std::vector<AffineWeylElement> next;
        for (const auto& g : frontier)
            for (int i = 0; i <= rs.rank; ++i) {
                auto h = compose(g, affine_simple_reflection(rs, i));
                if (dist.emplace(h, d).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return dist;
}

}  // namespace

TEST_CASE("length matches the Cayley graph") {
    for (const char* t : {"A1", "A2", "A3"}) {
        const auto rs = build_root_system(t);
        const int radius = rs.rank == 3 ? 4 : 6;
        const auto dist = bfs(rs, radius);
        for (const auto& [g, d] : dist) {
            CHECK(length(rs, g) == d);
            CHECK(length(rs, inverse(g)) == d);
        }
    }
    // A1 has 1 + 2*6 elements within distance 6
    CHECK(bfs(build_root_system("A1"), 6).size() == 13);
}

TEST_CASE("group law") {
    const auto rs = build_root_system("A2");
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> letter(0, 2);
    auto random_element = [&] {
        std::vector<int> w(8);
        for (int& x : w) x = letter(rng);
        return from_word(rs, w);
    };
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_element(), b = random_element(), c = random_element();
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, inverse(a)) == affine_identity(rs));
        const AffineWeight lam{{2, -1}, 3, 1};
        CHECK(act_affine(rs, compose(a, b), lam) == act_affine(rs, a, act_affine(rs, b, lam)));
        CHECK(affine_inner(rs, act_affine(rs, a, lam), act_affine(rs, a, lam)) == affine_inner(rs, lam, lam));
        CHECK(from_word(rs, reduced_word(rs, a)) == a);
    }
}

TEST_CASE("coset enumeration") {
    const auto rs = build_root_system("A1");
    const auto terms = cosets_up_to_shift(rs, {0}, 1, 12);
    // g = j alpha: offset (rho,g) + K(g,g)/2 = j + 3j^2
    std::multiset<int> offsets;
    for (const auto& t : terms) offsets.insert(t.offset);
    CHECK(offsets == std::multiset<int>{0, 2, 4, 10});
    for (const auto& t : terms) {
        CHECK(t.sign == (length(rs, t.element) % 2 ? -1 : 1));
        CHECK(dot_k(rs, t.element, {{0}, 1, 0}, 1) == t.image);
        CHECK(is_dominant(t.image.classical));
    }
}

TEST_CASE("translations agree with the simple reflection formulas") {
    const auto a1 = build_root_system("A1");
    CHECK(act_affine(a1, translation_element(a1, {2}), {{0}, 1, 0}) == AffineWeight{{2}, 1, -1});
    const auto st = compose(affine_simple_reflection(a1, 1), affine_simple_reflection(a1, 0));
    CHECK(st == translation_element(a1, {-2}));
    CHECK(act_affine(a1, st, {{1}, 1, 0}) == act_affine(a1, translation_element(a1, {-2}), {{1}, 1, 0}));
    const AffineWeight lam{{3}, 2, 5};
    CHECK(act_affine(a1, affine_identity(a1), lam) == lam);
    CHECK(dot_k(a1, affine_identity(a1), lam, 2) == lam);
    CHECK(dot_k(a1, affine_simple_reflection(a1, 0), {{0}, 0, 0}, 0) == AffineWeight{{2}, 0, -1});

    const auto a2 = build_root_system("A2");
    const auto t = translation_element(a2, {1, 1});
    CHECK(length(a2, t) == 4);
    const auto w = reduced_word(a2, t);
    CHECK(w.size() == 4);
    CHECK(from_word(a2, w) == t);
    CHECK(length(a2, affine_identity(a2)) == 0);
    CHECK(reduced_word(a2, affine_identity(a2)).empty());
}

TEST_CASE("dot action is an action") {
    std::mt19937 rng(7);
    const auto rs = build_root_system("A2");
    std::uniform_int_distribution<int> gen(0, 2), coord(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> word(6);
        for (int& x : word) x = gen(rng);
        const auto g = from_word(rs, word);
        const int k = trial % 3;
        const AffineWeight lam{{coord(rng), coord(rng)}, k, coord(rng)};
        CHECK(dot_k(rs, g, dot_k(rs, inverse(g), lam, k), k) == lam);
    }
}

TEST_CASE("small coset enumerations") {
    const auto a1 = build_root_system("A1");
    auto offsets = [&](const Weight& lam, int k, int N) {
        std::vector<int> out;
        for (const auto& t : cosets_up_to_shift(a1, lam, k, N)) out.push_back(t.offset);
        return out;
    };
    CHECK(offsets({0}, 1, 2) == std::vector<int>{0, 2});
    CHECK(offsets({1}, 1, 1) == std::vector<int>{0, 1});
    for (const char* type : {"A1", "A2", "D4"}) {
        const auto rs = build_root_system(type);
        const auto terms = cosets_up_to_shift(rs, Weight(rs.rank, 0), 1, 0);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].element == affine_identity(rs));
    }
}
