#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace weylcurrents {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in q with exact integer coefficients. Zero coefficients are never stored.
class QPolynomial {
public:
    using Terms = std::map<int, BigInt>;

    QPolynomial() = default;
    explicit QPolynomial(const BigInt& c, int exponent = 0);
    static QPolynomial monomial(int exponent, const BigInt& c = 1) { return QPolynomial(c, exponent); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(int exponent) const;
    void add_term(int exponent, const BigInt& c);

    int min_degree() const;  // requires non-zero
    int max_degree() const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial& operator*=(const BigInt& c);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

    // Product keeping only exponents <= cutoff.
    static QPolynomial mul_truncated(const QPolynomial& a, const QPolynomial& b, int cutoff);
    QPolynomial truncated(int cutoff) const;
    QPolynomial shifted(int by) const;
    QPolynomial inverted() const;  // f(q) -> f(q^{-1})
    BigInt at_one() const;
    bool nonnegative() const;
    bool is_monomial() const { return terms_.size() == 1 && terms_.begin()->second == 1; }

    std::string to_string() const;

private:
    Terms terms_;
};

// prod_{j=1}^{m} (1 - q^j)
QPolynomial q_pochhammer(int m);
// prod_{j=1}^{m} (1 - q^j)^{-1} up to q^cutoff
QPolynomial inverse_q_pochhammer(int m, int cutoff);
// 1/(1-q^n)^r up to q^cutoff
QPolynomial inverse_power(int n, int r, int cutoff);

}  // namespace weylcurrents
