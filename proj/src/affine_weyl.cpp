#include "weylcurrents/affine_weyl.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace weylcurrents {

namespace {

IntMatrix identity_matrix(int n) {
    IntMatrix m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix simple_matrix(const RootSystemData& rs, int i) {
    IntMatrix s = identity_matrix(rs.rank);
    for (int r = 0; r < rs.rank; ++r) s[r][i - 1] -= rs.cartan[i - 1][r];
    return s;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix p(n, std::vector<int>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t t = 0; t < n; ++t) {
            if (a[r][t] == 0) continue;
            for (std::size_t c = 0; c < n; ++c) p[r][c] += a[r][t] * b[t][c];
        }
    return p;
}

int to_int(const Rational& r) {
    if (r.denominator() != 1) throw std::logic_error("expected an integral pairing");
    return static_cast<int>(r.numerator());
}

Weight add_scaled(const Weight& a, const Weight& b, int s) {
    Weight out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
    return out;
}

}  // namespace

int theta_pairing(const RootSystemData& rs, const Weight& lambda) {
    return to_int(inner(rs, rs.highest_root, lambda));
}

bool in_level(const RootSystemData& rs, const Weight& lambda, int k) {
    return is_dominant(lambda) && theta_pairing(rs, lambda) <= k;
}

AffineWeight affine_simple_root(const RootSystemData& rs, int i) {
    if (i == 0) {
        Weight t = rs.highest_root;
        for (int& x : t) x = -x;
        return {t, 0, 1};
    }
    return {rs.simple_root(i), 0, 0};
}

int affine_pairing(const RootSystemData& rs, int i, const AffineWeight& lam) {
    if (i == 0) return lam.level - theta_pairing(rs, lam.classical);
    return lam.classical.at(i - 1);
}

AffineWeight affine_reflect(const RootSystemData& rs, int i, const AffineWeight& lam) {
    const int p = affine_pairing(rs, i, lam);
    if (p == 0) return lam;
    const AffineWeight a = affine_simple_root(rs, i);
    return {add_scaled(lam.classical, a.classical, -p), lam.level, lam.degree - p * a.degree};
}

Rational affine_inner(const RootSystemData& rs, const AffineWeight& a, const AffineWeight& b) {
    return inner(rs, a.classical, b.classical) + Rational(a.level * b.degree + b.level * a.degree);
}

Weight apply_finite(const IntMatrix& m, const Weight& w) {
    Weight out(w.size(), 0);
    for (std::size_t r = 0; r < w.size(); ++r)
        for (std::size_t c = 0; c < w.size(); ++c) out[r] += m[r][c] * w[c];
    return out;
}

int finite_sign(const IntMatrix& m) {
    // Bareiss elimination; entries of Weyl group matrices stay small.
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    int sign = 1;
    long long prev = 1;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return a[n - 1][n - 1] * sign > 0 ? 1 : -1;
}

AffineWeylElement affine_identity(const RootSystemData& rs) {
    return {identity_matrix(rs.rank), identity_matrix(rs.rank), rs.zero()};
}

AffineWeylElement translation_element(const RootSystemData& rs, const Weight& gamma) {
    if (!in_root_lattice(rs, gamma)) throw std::invalid_argument("translation must lie in the root lattice");
    auto g = affine_identity(rs);
    g.translation = gamma;
    return g;
}

AffineWeylElement finite_element(const RootSystemData& rs, const std::vector<int>& word) {
    auto g = affine_identity(rs);
    for (int i : word) {
        const IntMatrix s = simple_matrix(rs, i);
        g.finite = multiply(g.finite, s);
        g.finite_inv = multiply(s, g.finite_inv);
    }
    return g;
}

AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b) {
    // (w,g)(w',g') = (ww', w'^{-1} g + g')
    AffineWeylElement r;
    r.finite = multiply(a.finite, b.finite);
    r.finite_inv = multiply(b.finite_inv, a.finite_inv);
    r.translation = apply_finite(b.finite_inv, a.translation);
    for (std::size_t i = 0; i < r.translation.size(); ++i) r.translation[i] += b.translation[i];
    return r;
}

AffineWeylElement inverse(const AffineWeylElement& g) {
    AffineWeylElement r;
    r.finite = g.finite_inv;
    r.finite_inv = g.finite;
    r.translation = apply_finite(g.finite, g.translation);
    for (int& x : r.translation) x = -x;
    return r;
}

AffineWeylElement affine_simple_reflection(const RootSystemData& rs, int i) {
    if (i < 0 || i > rs.rank) throw std::out_of_range("affine simple reflection index out of range");
    if (i > 0) {
        auto g = affine_identity(rs);
        g.finite = g.finite_inv = simple_matrix(rs, i);
        return g;
    }
    // s_0 = s_theta t_{-theta}, i.e. t_{-theta} = s_theta s_0.
    auto g = affine_identity(rs);
    IntMatrix s = identity_matrix(rs.rank);
    const Weight& th = rs.highest_root;
    // s_theta(lambda) = lambda - (theta, lambda) theta, and (theta, omega_c) = column of marks
    std::vector<int> marks;
    to_root_coords(rs, th, marks);
    for (int r = 0; r < rs.rank; ++r)
        for (int c = 0; c < rs.rank; ++c) s[r][c] -= th[r] * marks[c];
    g.finite = g.finite_inv = s;
    g.translation = th;
    for (int& x : g.translation) x = -x;
    return g;
}

AffineWeylElement from_word(const RootSystemData& rs, const std::vector<int>& word) {
    auto g = affine_identity(rs);
    for (int i : word) g = compose(g, affine_simple_reflection(rs, i));
    return g;
}

AffineWeight act_affine(const RootSystemData& rs, const AffineWeylElement& g, const AffineWeight& lam) {
    const Weight& gam = g.translation;
    const int k = lam.level;
    Weight shifted = add_scaled(lam.classical, gam, k);
    const Rational d = Rational(lam.degree) - inner(rs, lam.classical, gam) - Rational(k) * inner(rs, gam, gam) / 2;
    return {apply_finite(g.finite, shifted), k, to_int(d)};
}

RhoShift rho_shift(const RootSystemData& rs, int k) {
    return {k, {rs.rho, k + rs.dual_coxeter, 0}};
}

AffineWeight dot_k(const RootSystemData& rs, const AffineWeylElement& g, const AffineWeight& lam, int k) {
    const auto rk = rho_shift(rs, k).value;
    AffineWeight x{add_scaled(lam.classical, rk.classical, 1), rk.level, lam.degree};
    AffineWeight y = act_affine(rs, g, x);
    return {add_scaled(y.classical, rk.classical, -1), lam.level, y.degree};
}

int length(const RootSystemData& rs, const AffineWeylElement& g) {
    std::set<Weight> positive(rs.positive_roots.begin(), rs.positive_roots.end());
    int total = 0;
    for (const auto& beta : rs.positive_roots) {
        const int p = to_int(inner(rs, g.translation, beta));
        const bool stays = positive.count(apply_finite(g.finite, beta)) > 0;
        total += stays ? std::abs(p) : std::abs(p + 1);
    }
    return total;
}

std::vector<int> reduced_word(const RootSystemData& rs, const AffineWeylElement& g) {
    std::vector<int> word;
    AffineWeylElement cur = g;
    int len = length(rs, cur);
    while (len > 0) {
        bool found = false;
        for (int i = 0; i <= rs.rank && !found; ++i) {
            auto next = compose(affine_simple_reflection(rs, i), cur);
            const int l = length(rs, next);
            if (l < len) {
                word.push_back(i);
                cur = std::move(next);
                len = l;
                found = true;
            }
        }
        if (!found) throw std::logic_error("reduced_word: no descent found");
    }
    return word;
}

std::vector<Weight> root_lattice_ball(const RootSystemData& rs, double radius) {
    const int n = rs.rank;
    std::vector<int> bound(n);
    for (int i = 0; i < n; ++i) {
        const double w = std::sqrt(boost::rational_cast<double>(rs.inverse_cartan[i][i]));
        bound[i] = static_cast<int>(std::floor(w * radius + 1e-9));
    }
    const Rational r2(static_cast<std::int64_t>(std::ceil(radius * radius * 1e6)), 1000000);
    std::vector<Weight> out;
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = -bound[i];
    for (;;) {
        Weight g = from_root_coords(rs, c);
        if (inner(rs, g, g) <= r2) out.push_back(g);
        int i = 0;
        while (i < n && c[i] == bound[i]) {
            c[i] = -bound[i];
            ++i;
        }
        if (i == n) break;
        ++c[i];
    }
    return out;
}

std::vector<CosetTerm> cosets_up_to_shift(const RootSystemData& rs, const Weight& lambda, int k, int N) {
    if (!in_level(rs, lambda, k)) throw std::invalid_argument("cosets_up_to_shift: weight is not in P_+^k");
    const int K = k + rs.dual_coxeter;
    Weight lr = add_scaled(lambda, rs.rho, 1);
    const double v = std::sqrt(boost::rational_cast<double>(inner(rs, lr, lr)));
    const double radius = (v + std::sqrt(v * v + 2.0 * K * std::max(N, 0))) / K + 1e-7;

    std::vector<CosetTerm> out;
    for (const auto& gam : root_lattice_ball(rs, radius)) {
        const Rational off = inner(rs, lr, gam) + Rational(K) * inner(rs, gam, gam) / 2;
        if (off > N) continue;
        Weight x = add_scaled(lr, gam, K);
        // bring x to the dominant chamber, recording the finite part
        IntMatrix u = identity_matrix(rs.rank), uinv = u;
        int refl = 0;
        for (;;) {
            int i = 0;
            while (i < rs.rank && x[i] > 0) ++i;
            if (i == rs.rank) break;
            if (x[i] == 0) throw std::logic_error("cosets_up_to_shift: regular orbit hit a wall");
            x = reflect(rs, i + 1, x);
            const IntMatrix s = simple_matrix(rs, i + 1);
            u = multiply(s, u);
            uinv = multiply(uinv, s);
            ++refl;
        }
        CosetTerm t;
        t.element = {u, uinv, gam};
        t.offset = to_int(off);
        t.image = {add_scaled(x, rs.rho, -1), k, -t.offset};
        t.sign = refl % 2 ? -1 : 1;
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const CosetTerm& a, const CosetTerm& b) {
        if (a.offset != b.offset) return a.offset < b.offset;
        return a.image.classical < b.image.classical;
    });
    return out;
}

std::optional<DotRep> dominant_dot_rep(const RootSystemData& rs, const Weight& lambda, int k) {
    if (k < 1) throw std::invalid_argument("dominant_dot_rep: level must be positive");
    const auto rk = rho_shift(rs, k).value;
    AffineWeight x{add_scaled(lambda, rk.classical, 1), rk.level, 0};
    DotRep rep;
    rep.element = affine_identity(rs);
    for (;;) {
        int i = 0;
        while (i <= rs.rank && affine_pairing(rs, i, x) >= 0) ++i;
        if (i > rs.rank) break;
        x = affine_reflect(rs, i, x);
        rep.element = compose(affine_simple_reflection(rs, i), rep.element);
        rep.sign = -rep.sign;
    }
    for (int i = 0; i <= rs.rank; ++i)
        if (affine_pairing(rs, i, x) == 0) return std::nullopt;
    rep.dominant = add_scaled(x.classical, rk.classical, -1);
    rep.delta_shift = x.degree;
    return rep;
}

}  // namespace weylcurrents
