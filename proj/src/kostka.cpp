#include "weylcurrents/kostka.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <tuple>

namespace weylcurrents {

namespace {

void require_type_a(const RootSystemData& rs) {
    if (rs.family != Family::A) throw std::invalid_argument("crystal routes are implemented in type A only");
}

Weight minus_w0(const RootSystemData& rs, const Weight& nu) {
    Weight x = nu;
    for (;;) {
        int i = 0;
        while (i < rs.rank && x[i] <= 0) ++i;
        if (i == rs.rank) break;
        x = reflect(rs, i + 1, x);
    }
    for (int& v : x) v = -v;
    return x;
}

}  // namespace

std::string route_name(Route r) {
    switch (r) {
        case Route::Paths: return "paths";
        case Route::AltSum: return "altsum";
        case Route::Characters: return "chars";
    }
    return "?";
}

std::map<Weight, QPolynomial> X_table(int n, const Weight& mu, std::optional<int> k, const CrystalGraph* graph) {
    std::map<Weight, QPolynomial> out;
    for (const auto& p : restricted_paths(n, mu, k, graph)) {
        QPolynomial t = QPolynomial::monomial(-p.D);
        auto [it, ins] = out.try_emplace(p.wt, t);
        if (!ins) it->second += t;
    }
    return out;
}

QPolynomial X_poly(int n, const Weight& mu, const Weight& lambda, const CrystalGraph* graph) {
    auto t = X_table(n, mu, std::nullopt, graph);
    auto it = t.find(lambda);
    return it == t.end() ? QPolynomial() : it->second;
}

QPolynomial X_restricted(int n, const Weight& mu, const Weight& lambda, int k, const CrystalGraph* graph) {
    const auto rs = build_root_system(Family::A, n);
    if (k < 1 || !in_level(rs, lambda, k)) throw std::invalid_argument("X_restricted: lambda is not in P_+^k");
    auto t = X_table(n, mu, k, graph);
    auto it = t.find(lambda);
    return it == t.end() ? QPolynomial() : it->second;
}

QPolynomial X_alt_sum(const RootSystemData& rs, const Weight& mu, const Weight& lambda, int k,
                      const CrystalGraph* graph) {
    require_type_a(rs);
    if (k < 1 || !in_level(rs, lambda, k)) throw std::invalid_argument("X_alt_sum: lambda is not in P_+^k");
    const auto table = X_table(rs.rank, mu, std::nullopt, graph);
    if (table.empty()) return {};
    // (nu + rho)^2 = (lambda + rho)^2 + 2K offset, and nu ranges over a finite support.
    Weight lr = lambda;
    for (int& x : lr) ++x;
    Rational top(0);
    for (const auto& [nu, p] : table) {
        Weight nr = nu;
        for (int& x : nr) ++x;
        top = std::max(top, inner(rs, nr, nr));
    }
    const int K = k + rs.dual_coxeter;
    const Rational bound = (top - inner(rs, lr, lr)) / (2 * K);
    if (bound < 0) return {};
    const int N = static_cast<int>(bound.numerator() / bound.denominator());

    QPolynomial sum;
    for (const auto& t : cosets_up_to_shift(rs, lambda, k, N)) {
        auto it = table.find(t.image.classical);
        if (it == table.end()) continue;
        QPolynomial term = it->second.shifted(t.offset);
        term *= t.sign;
        sum += term;
    }
    return sum;
}

const GlobalWeylExpansion& restricted_expansion(const RootSystemData& rs, const Weight& lambda, int k, int N) {
    using Key = std::tuple<std::string, Weight, int, int>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const GlobalWeylExpansion>> memo;
    const Key key{rs.name(), lambda, k, N};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return *it->second;
    }
    auto e = std::make_shared<const GlobalWeylExpansion>(expand_in_global_weyl(rs, integrable_irreps(rs, lambda, k, N), N));
    if (!e->remainder_zero) throw CharacterError("global Weyl expansion left a nonzero remainder");
    std::lock_guard<std::mutex> lock(mu);
    return *memo.emplace(key, e).first->second;
}

QPolynomial P_restricted(const RootSystemData& rs, const Weight& mu, const Weight& lambda, int k, int N) {
    if (!is_dominant(mu)) throw std::invalid_argument("P_restricted: mu is not dominant");
    if (k < 1 || !in_level(rs, lambda, k)) throw std::invalid_argument("P_restricted: lambda is not in P_+^k");
    const int need = local_weyl_top_degree(rs, mu);
    if (N < need)
        throw TruncationError("cutoff N=" + std::to_string(N) + " does not certify mu=" + weight_to_string(mu) +
                                  "; use N >= " + std::to_string(need),
                              need);
    const auto& e = restricted_expansion(rs, lambda, k, N);
    auto it = e.multiplicities.find(mu);
    return it == e.multiplicities.end() ? QPolynomial() : it->second;
}

QPolynomial P_unrestricted(const RootSystemData& rs, const Weight& mu, const Weight& lambda, int N) {
    if (!is_dominant(mu) || !is_dominant(lambda)) throw std::invalid_argument("P_unrestricted: weights must be dominant");
    // W(-w0 mu, 0)^*: constituents V(nu)^* = V(-w0 nu), grading reversed. Its V(lambda) multiplicity is P(q^{-1}).
    const Weight twisted = minus_w0(rs, mu);
    QPolynomial p_inv;
    for (const auto& [nu, p] : local_weyl_irreps(rs, twisted).terms)
        if (minus_w0(rs, nu) == lambda) p_inv += p.inverted();
    return p_inv.inverted().truncated(N);
}

GlobalWeylExpansion level_one_multiplicities(const RootSystemData& rs, const Weight& varpi, int N) {
    if (!in_level(rs, varpi, 1)) throw std::invalid_argument("level_one_multiplicities: weight is not in P_+^1");
    return restricted_expansion(rs, varpi, 1, N);
}

Rational level_one_exponent(const RootSystemData& rs, const Weight& varpi, const Weight& lambda) {
    return (inner(rs, lambda, lambda) - inner(rs, varpi, varpi)) / 2;
}

KostkaResult kostka(const RootSystemData& rs, const Weight& mu, const Weight& lambda, std::optional<int> k, Route route,
                    int N, const CrystalGraph* graph) {
    KostkaResult r{mu, lambda, k, {}, route};
    switch (route) {
        case Route::Paths:
            require_type_a(rs);
            r.value = k ? X_restricted(rs.rank, mu, lambda, *k, graph) : X_poly(rs.rank, mu, lambda, graph);
            break;
        case Route::AltSum:
            if (!k) throw std::invalid_argument("the alternating-sum route needs a level k");
            r.value = X_alt_sum(rs, mu, lambda, *k, graph);
            break;
        case Route::Characters:
            r.value = k ? P_restricted(rs, mu, lambda, *k, N) : P_unrestricted(rs, mu, lambda, N);
            break;
    }
    return r;
}

}  // namespace weylcurrents
