#include "weylcurrents/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace weylcurrents {

QPolynomial::QPolynomial(const BigInt& c, int exponent) {
    if (c != 0) terms_.emplace(exponent, c);
}

BigInt QPolynomial::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void QPolynomial::add_term(int exponent, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int QPolynomial::min_degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
    return terms_.begin()->first;
}

int QPolynomial::max_degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
    return terms_.rbegin()->first;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QPolynomial& QPolynomial::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r;
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

QPolynomial QPolynomial::mul_truncated(const QPolynomial& a, const QPolynomial& b, int cutoff) {
    QPolynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    const int bmin = b.min_degree();
    for (const auto& [e1, c1] : a.terms_) {
        if (e1 + bmin > cutoff) break;
        for (const auto& [e2, c2] : b.terms_) {
            if (e1 + e2 > cutoff) break;
            r.add_term(e1 + e2, c1 * c2);
        }
    }
    return r;
}

QPolynomial QPolynomial::truncated(int cutoff) const {
    QPolynomial r;
    for (const auto& [e, c] : terms_) {
        if (e > cutoff) break;
        r.terms_.emplace_hint(r.terms_.end(), e, c);
    }
    return r;
}

QPolynomial QPolynomial::shifted(int by) const {
    QPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + by, c);
    return r;
}

QPolynomial QPolynomial::inverted() const {
    QPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

BigInt QPolynomial::at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool QPolynomial::nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::string QPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

QPolynomial q_pochhammer(int m) {
    QPolynomial r(1);
    for (int j = 1; j <= m; ++j) {
        QPolynomial f(1);
        f.add_term(j, -1);
        r = r * f;
    }
    return r;
}

QPolynomial inverse_power(int n, int r, int cutoff) {
    QPolynomial acc(1);
    if (cutoff < 0) return QPolynomial();
    QPolynomial geo;
    for (int e = 0; e <= cutoff; e += n) geo.add_term(e, 1);
    for (int t = 0; t < r; ++t) acc = QPolynomial::mul_truncated(acc, geo, cutoff);
    return acc;
}

QPolynomial inverse_q_pochhammer(int m, int cutoff) {
    QPolynomial acc(1);
    if (cutoff < 0) return QPolynomial();
    for (int j = 1; j <= m; ++j) acc = QPolynomial::mul_truncated(acc, inverse_power(j, 1, cutoff), cutoff);
    return acc;
}

}  // namespace weylcurrents
