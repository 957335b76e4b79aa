#include "weylcurrents/qpoly.hpp"

#include <doctest.h>

using namespace weylcurrents;

TEST_CASE("arithmetic keeps no zero terms") {
    QPolynomial a = QPolynomial::monomial(0) + QPolynomial::monomial(2, 3);
    QPolynomial b = a;
    b -= a;
    CHECK(b.is_zero());
    CHECK((a * a).coeff(2) == 6);
    CHECK((a * a).coeff(4) == 9);
    CHECK(a.shifted(-3).min_degree() == -3);
    CHECK(a.inverted().coeff(-2) == 3);
    CHECK(a.at_one() == 4);
    CHECK(a.to_string() == "1 + 3*q^2");
}

TEST_CASE("Euler function inverts the q-Pochhammer symbol") {
    for (int m = 1; m <= 6; ++m) {
        const auto prod = QPolynomial::mul_truncated(q_pochhammer(m), inverse_q_pochhammer(m, 15), 15);
        CHECK(prod == QPolynomial(1));
    }
    // 1/(q;q)_inf coefficients are partition numbers
    const auto p = inverse_q_pochhammer(12, 12);
    const int partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) CHECK(p.coeff(n) == partitions[n]);
}

TEST_CASE("inverse powers") {
    const auto s = inverse_power(2, 2, 8);  // 1/(1-q^2)^2 = sum (j+1) q^{2j}
    for (int j = 0; j <= 4; ++j) CHECK(s.coeff(2 * j) == j + 1);
    CHECK(s.coeff(1) == 0);
    CHECK(s.max_degree() == 8);
}

TEST_CASE("large coefficients stay exact") {
    QPolynomial x(1);
    const QPolynomial two(2);
    for (int i = 0; i < 100; ++i) x = x * two;
    BigInt want = 1;
    want <<= 100;
    CHECK(x.coeff(0) == want);
}
