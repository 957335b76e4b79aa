#include "weylcurrents/kostka.hpp"
#include "weylcurrents/verify.hpp"

#include <doctest.h>

using namespace weylcurrents;

namespace {
QPolynomial q(int e) { return QPolynomial::monomial(e); }
}  // namespace

TEST_CASE("desk values") {
    const auto a1 = build_root_system("A1");
    CHECK(X_restricted(1, {2}, {0}, 1) == q(1));
    CHECK(X_poly(1, {2}, {0}) == q(1));
    CHECK(X_poly(1, {2}, {2}) == q(0));
    CHECK(X_alt_sum(a1, {2}, {0}, 1) == q(1));
    for (int k = 1; k <= 3; ++k) CHECK(P_restricted(a1, {0}, {0}, k, 4) == q(0));
}

TEST_CASE("restriction removes paths with large eps_0") {
    // in B_loc(2w) the highest element {1}(x){1} has eps_0 = 2
    CHECK(X_restricted(1, {2}, {2}, 2) == q(0));
    CHECK_THROWS_AS(X_restricted(1, {2}, {2}, 1), std::invalid_argument);
    CHECK(X_restricted(1, {4}, {0}, 1) == X_alt_sum(build_root_system("A1"), {4}, {0}, 1));
}

TEST_CASE("unrestricted multiplicities equal one-dimensional sums") {
    const auto a2 = build_root_system("A2");
    for (const auto& mu : bounded_dominant(2, 3))
        for (const auto& [lam, m] : freudenthal_dominant(a2, mu)) {
            CAPTURE(weight_to_string(mu));
            CAPTURE(weight_to_string(lam));
            CHECK(P_unrestricted(a2, mu, lam, 20) == X_poly(2, mu, lam));
        }
}

TEST_CASE("large level makes the restriction vacuous") {
    const auto a1 = build_root_system("A1");
    // X^(k) = X once k is at least the number of tensor factors
    for (int m = 0; m <= 4; ++m)
        for (int l = m; l >= 0; l -= 2) CHECK(X_restricted(1, {m}, {l}, 4) == X_poly(1, {m}, {l}));
}

TEST_CASE("truncation is reported with the needed cutoff") {
    const auto a1 = build_root_system("A1");
    try {
        P_restricted(a1, {6}, {0}, 1, 5);
        FAIL("expected TruncationError");
    } catch (const TruncationError& e) {
        CHECK(e.required_cutoff == 9);
    }
}

TEST_CASE("level one multiplicities are monomials") {
    const auto a2 = build_root_system("A2");
    const auto e = level_one_multiplicities(a2, {1, 0}, 6);
    CHECK(e.remainder_zero);
    for (const auto& [nu, p] : e.multiplicities) {
        const Rational ex = level_one_exponent(a2, {1, 0}, nu);
        REQUIRE(ex.denominator() == 1);
        CHECK(p == q(static_cast<int>(ex.numerator())));
    }
    CHECK(e.multiplicities.size() >= 3);
}

TEST_CASE("route dispatch") {
    const auto a1 = build_root_system("A1");
    for (Route r : {Route::Paths, Route::AltSum, Route::Characters})
        CHECK(kostka(a1, {2}, {0}, 1, r, 4).value == q(1));
    CHECK_THROWS_AS(kostka(a1, {2}, {0}, std::nullopt, Route::AltSum, 4), std::invalid_argument);
    CHECK_THROWS_AS(kostka(build_root_system("D4"), {1, 0, 0, 0}, {1, 0, 0, 0}, 1, Route::Paths, 4),
                    std::invalid_argument);
    CHECK(route_name(Route::AltSum) == "altsum");
}

TEST_CASE("small Kostka values") {
    const auto a1 = build_root_system("A1");
    const auto a2 = build_root_system("A2");
    CHECK(X_poly(1, {2}, {1}).is_zero());
    CHECK(X_restricted(1, {1}, {1}, 1) == q(0));
    CHECK(X_alt_sum(a1, {0}, {0}, 1) == q(0));
    CHECK(X_alt_sum(a2, {0, 0}, {0, 0}, 2) == q(0));
    CHECK(P_restricted(a1, {2}, {0}, 1, 8) == q(1));
    CHECK(P_unrestricted(a1, {2}, {0}, 8) == q(1));
    for (const auto& mu : bounded_dominant(2, 2)) {
        CHECK(P_unrestricted(a2, mu, mu, 10) == q(0));
        const int level = mu[0] + mu[1];
        if (level > 0) CHECK(P_restricted(a2, mu, mu, level, 10) == q(0));
        // a weight that is not below mu
        Weight above = mu;
        above[0] += 3;
        CHECK(P_unrestricted(a2, mu, above, 10).is_zero());
    }
    for (int m = 0; m <= 4; ++m)
        for (int l = m; l >= 0; l -= 2) CHECK(X_alt_sum(a1, {m}, {l}, 5) == X_poly(1, {m}, {l}));
}

TEST_CASE("level one multiplicities of A1") {
    const auto a1 = build_root_system("A1");
    const auto even = level_one_multiplicities(a1, {0}, 6);
    CHECK(even.multiplicities == std::map<Weight, QPolynomial>{{{0}, q(0)}, {{2}, q(1)}, {{4}, q(4)}});
    const auto odd = level_one_multiplicities(a1, {1}, 6);
    CHECK(odd.multiplicities == std::map<Weight, QPolynomial>{{{1}, q(0)}, {{3}, q(2)}, {{5}, q(6)}});
}
