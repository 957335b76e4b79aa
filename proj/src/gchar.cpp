#include "weylcurrents/gchar.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace weylcurrents {

namespace {

using PlainIrreps = std::map<Weight, BigInt>;

void add_poly(std::map<Weight, QPolynomial>& m, const Weight& w, const QPolynomial& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = m.try_emplace(w, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) m.erase(it);
    }
}

void add_big(PlainIrreps& m, const Weight& w, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = m.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

Weight plus(const Weight& a, const Weight& b, int s = 1) {
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
    return r;
}

struct WeightCache {
    std::mutex mu;
    std::map<std::pair<std::string, Weight>, std::shared_ptr<const WeightMultiplicities>> full, dom;
};

WeightCache& weight_cache() {
    static WeightCache c;
    return c;
}

std::shared_ptr<const WeightMultiplicities> cached_weights(const RootSystemData& rs, const Weight& lambda,
                                                           bool dominant_only) {
    auto& cache = weight_cache();
    auto key = std::make_pair(rs.name(), lambda);
    auto& table = dominant_only ? cache.dom : cache.full;
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = table.find(key);
        if (it != table.end()) return it->second;
    }
    auto value = std::make_shared<const WeightMultiplicities>(
        dominant_only ? freudenthal_dominant(rs, lambda) : freudenthal_weights(rs, lambda));
    std::lock_guard<std::mutex> lock(cache.mu);
    return table.emplace(key, value).first->second;
}

// Brauer-Klimyk on q-free irreducible expansions.
PlainIrreps tensor_plain(const RootSystemData& rs, const PlainIrreps& e, const PlainIrreps& chi) {
    PlainIrreps out;
    Weight dom;
    int sign = 1;
    for (const auto& [mu, c] : e)
        for (const auto& [xi, m] : chi) {
            if (!dot_dominant(rs, plus(mu, xi), dom, sign)) continue;
            add_big(out, dom, sign * c * m);
        }
    return out;
}

// Weight multiplicities of sum_{m | j} (j/m) psi^m(ch g).
std::vector<PlainIrreps> adjoint_power_sums(const RootSystemData& rs, int N) {
    std::vector<PlainIrreps> g(N + 1);
    for (int j = 1; j <= N; ++j) {
        for (int m = 1; m <= j; ++m) {
            if (j % m) continue;
            const int c = j / m;
            add_big(g[j], rs.zero(), BigInt(rs.rank) * c);
            for (const auto& a : rs.positive_roots) {
                Weight up = a, down = a;
                for (int t = 0; t < rs.rank; ++t) {
                    up[t] *= m;
                    down[t] *= -m;
                }
                add_big(g[j], up, c);
                add_big(g[j], down, c);
            }
        }
    }
    return g;
}

// Degree pieces T_0..T_D of start * prod_{n>=1} prod_{xi in wt(g)} (1 - q^n e^xi)^{-1},
// through n T_n = sum_{j=1}^{n} G_j T_{n-j}.
std::vector<PlainIrreps> symmetric_algebra_series(const RootSystemData& rs, const PlainIrreps& start, int D,
                                                  const std::vector<PlainIrreps>& g) {
    std::vector<PlainIrreps> t(std::max(D, 0) + 1);
    if (D < 0) return {};
    t[0] = start;
    for (int n = 1; n <= D; ++n) {
        PlainIrreps acc;
        for (int j = 1; j <= n; ++j)
            for (const auto& [w, c] : tensor_plain(rs, t[n - j], g[j])) add_big(acc, w, c);
        for (auto& [w, c] : acc) {
            if (c % n != 0) throw std::logic_error("symmetric algebra recurrence: inexact division");
            c /= n;
        }
        t[n] = std::move(acc);
    }
    return t;
}

Weight antidominant(const RootSystemData& rs, const Weight& lambda) {
    Weight x = lambda;
    for (;;) {
        int i = 0;
        while (i < rs.rank && x[i] <= 0) ++i;
        if (i == rs.rank) return x;
        x = reflect(rs, i + 1, x);
    }
}

struct LocalWeylData {
    GradedCharacter full;
    IrrepExpansion irreps;
    int top = 0;
};

struct LocalWeylCache {
    std::mutex mu;
    std::map<std::pair<std::string, Weight>, std::shared_ptr<const LocalWeylData>> table;
};

LocalWeylCache& local_cache() {
    static LocalWeylCache c;
    return c;
}

std::shared_ptr<const LocalWeylData> compute_local_weyl(const RootSystemData& rs, const Weight& lambda) {
    Weight varpi;
    const auto word = local_weyl_word(rs, lambda, &varpi);
    AffineCharacter c = AffineCharacter::single({varpi, 1, 0});
    for (auto it = word.rbegin(); it != word.rend(); ++it) c = demazure_step(rs, *it, c);

    auto head = c.terms.find(lambda);
    if (head == c.terms.end() || !head->second.is_monomial())
        throw CharacterError("local Weyl: head weight is not a single extremal term");
    const int head_degree = head->second.min_degree();

    auto data = std::make_shared<LocalWeylData>();
    int top = 0;
    for (const auto& [w, p] : c.terms) {
        QPolynomial shifted = p.shifted(-head_degree);
        if (shifted.min_degree() < 0) throw CharacterError("local Weyl: term below the head degree");
        top = std::max(top, shifted.max_degree());
        data->full.add(w, shifted);
    }
    data->top = top;
    data->full.cutoff = top;
    data->irreps = to_irreps(rs, data->full);
    return data;
}

std::shared_ptr<const LocalWeylData> local_weyl_data(const RootSystemData& rs, const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("local Weyl module needs a dominant weight");
    auto& cache = local_cache();
    auto key = std::make_pair(rs.name(), lambda);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.table.find(key);
        if (it != cache.table.end()) return it->second;
    }
    auto value = compute_local_weyl(rs, lambda);
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.table.emplace(key, value).first->second;
}

QPolynomial hilbert_series(const Weight& lambda, int N) {
    QPolynomial h(1);
    for (int m : lambda) h = QPolynomial::mul_truncated(h, inverse_q_pochhammer(m, N), N);
    return h;
}

QPolynomial hilbert_inverse(const Weight& lambda) {
    QPolynomial h(1);
    for (int m : lambda) h = h * q_pochhammer(m);
    return h;
}

}  // namespace

void GradedCharacter::add(const Weight& w, const QPolynomial& p) { add_poly(terms, w, p); }

QPolynomial GradedCharacter::at(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? QPolynomial() : it->second;
}

GradedCharacter GradedCharacter::truncated(int n) const {
    GradedCharacter r;
    r.cutoff = std::min(cutoff, n);
    r.level_tag = level_tag;
    for (const auto& [w, p] : terms) r.add(w, p.truncated(n));
    return r;
}

bool GradedCharacter::nonnegative() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.nonnegative(); });
}

void IrrepExpansion::add(const Weight& w, const QPolynomial& p) { add_poly(terms, w, p); }

QPolynomial IrrepExpansion::at(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? QPolynomial() : it->second;
}

IrrepExpansion IrrepExpansion::truncated(int n) const {
    IrrepExpansion r;
    r.cutoff = std::min(cutoff, n);
    for (const auto& [w, p] : terms) r.add(w, p.truncated(n));
    return r;
}

AffineCharacter AffineCharacter::single(const AffineWeight& w) {
    AffineCharacter c;
    c.level = w.level;
    c.add(w.classical, QPolynomial::monomial(w.degree));
    return c;
}

void AffineCharacter::add(const Weight& w, const QPolynomial& p) { add_poly(terms, w, p); }

GradedCharacter char_irreducible(const RootSystemData& rs, const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("char_irreducible: weight is not dominant");
    GradedCharacter c;
    for (const auto& [w, m] : *cached_weights(rs, lambda, false)) c.add(w, QPolynomial(BigInt(m)));
    return c;
}

GradedCharacter char_parabolic_verma(const RootSystemData& rs, const Weight& lambda, int N) {
    if (!is_dominant(lambda)) throw std::invalid_argument("char_parabolic_verma: weight is not dominant");
    std::vector<PlainIrreps> level(std::max(N, 0) + 1);
    for (const auto& [w, m] : *cached_weights(rs, lambda, false)) level[0][w] = m;

    std::vector<Weight> factors(rs.rank, rs.zero());
    for (const auto& a : rs.positive_roots) {
        factors.push_back(a);
        Weight neg = a;
        for (int& x : neg) x = -x;
        factors.push_back(neg);
    }
    // multiply by (1 - q^n e^xi)^{-1}: c[w, d] += c[w - xi, d - n] in increasing d
    for (int n = 1; n <= N; ++n)
        for (const auto& xi : factors)
            for (int d = n; d <= N; ++d) {
                const PlainIrreps src = level[d - n];
                for (const auto& [w, c] : src) add_big(level[d], plus(w, xi), c);
            }

    GradedCharacter out;
    out.cutoff = N;
    for (int d = 0; d <= N; ++d)
        for (const auto& [w, c] : level[d]) out.add(w, QPolynomial::monomial(d, c));
    return out;
}

IrrepExpansion parabolic_verma_irreps(const RootSystemData& rs, const Weight& lambda, int N) {
    if (!is_dominant(lambda)) throw std::invalid_argument("parabolic_verma_irreps: weight is not dominant");
    const auto g = adjoint_power_sums(rs, N);
    const auto t = symmetric_algebra_series(rs, PlainIrreps{{lambda, 1}}, N, g);
    IrrepExpansion out;
    out.cutoff = N;
    for (int d = 0; d <= N; ++d)
        for (const auto& [w, c] : t[d]) out.add(w, QPolynomial::monomial(d, c));
    return out;
}

IrrepExpansion integrable_irreps(const RootSystemData& rs, const Weight& lambda, int k, int N) {
    if (k < 1 || !in_level(rs, lambda, k)) throw std::invalid_argument("char_integrable: weight is not in P_+^k");
    std::map<int, PlainIrreps> numerator;
    for (const auto& term : cosets_up_to_shift(rs, lambda, k, N))
        add_big(numerator[term.offset], term.image.classical, term.sign);

    const auto g = adjoint_power_sums(rs, N);
    IrrepExpansion out;
    out.cutoff = N;
    for (const auto& [a, start] : numerator) {
        const auto t = symmetric_algebra_series(rs, start, N - a, g);
        for (int d = 0; d + a <= N; ++d)
            for (const auto& [w, c] : t[d]) out.add(w, QPolynomial::monomial(a + d, c));
    }
    for (const auto& [w, p] : out.terms)
        if (!p.nonnegative()) throw CharacterError("char_integrable: negative multiplicity (convention failure)");
    return out;
}

GradedCharacter char_integrable(const RootSystemData& rs, const Weight& lambda, int k, int N) {
    GradedCharacter c = materialize(rs, integrable_irreps(rs, lambda, k, N));
    c.cutoff = N;
    c.level_tag = k;
    if (!c.nonnegative()) throw CharacterError("char_integrable: negative coefficient");
    return c;
}

AffineCharacter demazure_step(const RootSystemData& rs, int i, const AffineCharacter& c) {
    if (i < 0 || i > rs.rank) throw std::out_of_range("demazure_step: index out of range");
    AffineCharacter out;
    out.level = c.level;
    const AffineWeight alpha = affine_simple_root(rs, i);
    for (const auto& [w, p] : c.terms) {
        const int m = affine_pairing(rs, i, {w, c.level, 0});
        if (m >= 0) {
            Weight x = w;
            for (int j = 0; j <= m; ++j) {
                out.add(x, p.shifted(-j * alpha.degree));
                x = plus(x, alpha.classical, -1);
            }
        } else if (m <= -2) {
            Weight x = w;
            QPolynomial neg = p;
            neg *= -1;
            for (int j = 1; j <= -m - 1; ++j) {
                x = plus(x, alpha.classical);
                out.add(x, neg.shifted(j * alpha.degree));
            }
        }
    }
    return out;
}

std::vector<int> local_weyl_word(const RootSystemData& rs, const Weight& lambda, Weight* varpi_out) {
    if (!is_dominant(lambda)) throw std::invalid_argument("local Weyl module needs a dominant weight");
    std::vector<Weight> candidates{rs.zero()};
    for (int i = 0; i < rs.rank; ++i) {
        Weight w = rs.zero();
        w[i] = 1;
        if (theta_pairing(rs, w) == 1) candidates.push_back(w);
    }
    std::optional<Weight> varpi;
    for (const auto& v : candidates)
        if (in_root_lattice(rs, plus(lambda, v, -1))) varpi = v;
    if (!varpi) throw std::logic_error("no level one weight in the class of lambda");

    const Weight low = antidominant(rs, lambda);
    AffineWeight x = act_affine(rs, translation_element(rs, plus(low, *varpi, -1)), {*varpi, 1, 0});
    std::vector<int> word;
    for (;;) {
        int i = 0;
        while (i <= rs.rank && affine_pairing(rs, i, x) >= 0) ++i;
        if (i > rs.rank) break;
        word.push_back(i);
        x = affine_reflect(rs, i, x);
    }
    if (x != AffineWeight{*varpi, 1, 0}) throw std::logic_error("local Weyl word did not reach varpi + Lambda_0");
    if (varpi_out) *varpi_out = *varpi;
    return word;
}

GradedCharacter char_local_weyl(const RootSystemData& rs, const Weight& lambda, int N) {
    return local_weyl_data(rs, lambda)->full.truncated(N);
}

IrrepExpansion local_weyl_irreps(const RootSystemData& rs, const Weight& lambda) {
    return local_weyl_data(rs, lambda)->irreps;
}

int local_weyl_top_degree(const RootSystemData& rs, const Weight& lambda) {
    return local_weyl_data(rs, lambda)->top;
}

void clear_local_weyl_cache() {
    auto& cache = local_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.table.clear();
}

GradedCharacter char_global_weyl(const RootSystemData& rs, const Weight& lambda, int N) {
    const QPolynomial h = hilbert_series(lambda, N);
    GradedCharacter out;
    out.cutoff = N;
    for (const auto& [w, p] : local_weyl_data(rs, lambda)->full.terms)
        out.add(w, QPolynomial::mul_truncated(p, h, N));
    return out;
}

IrrepExpansion to_irreps(const RootSystemData& rs, const GradedCharacter& c) {
    std::map<std::pair<std::int64_t, Weight>, QPolynomial, std::greater<>> residual;
    for (const auto& [w, p] : c.terms)
        if (is_dominant(w)) residual.emplace(std::make_pair(height_key(rs, w), w), p);
    IrrepExpansion out;
    out.cutoff = c.cutoff;
    while (!residual.empty()) {
        auto top = residual.begin();
        const Weight nu = top->first.second;
        const QPolynomial p = top->second;
        residual.erase(top);
        if (p.is_zero()) continue;
        out.add(nu, p);
        for (const auto& [w, m] : *cached_weights(rs, nu, true)) {
            if (w == nu) continue;
            QPolynomial sub = p;
            sub *= -BigInt(m);
            auto key = std::make_pair(height_key(rs, w), w);
            auto it = residual.find(key);
            if (it == residual.end()) residual.emplace(key, sub);
            else it->second += sub;
        }
    }
    // simple reflections connect each orbit
    for (const auto& [w, p] : c.terms)
        for (int i = 1; i <= rs.rank; ++i)
            if (!(c.at(reflect(rs, i, w)) == p))
                throw CharacterError("character is not W-invariant at " + weight_to_string(w));
    return out;
}

GradedCharacter materialize(const RootSystemData& rs, const IrrepExpansion& e) {
    GradedCharacter out;
    out.cutoff = e.cutoff;
    for (const auto& [nu, p] : e.terms)
        for (const auto& [w, m] : *cached_weights(rs, nu, false)) {
            QPolynomial t = p;
            t *= BigInt(m);
            out.add(w, t);
        }
    return out;
}

IrrepExpansion tensor_with(const RootSystemData& rs, const IrrepExpansion& e, const std::map<Weight, BigInt>& chi) {
    IrrepExpansion out;
    out.cutoff = e.cutoff;
    Weight dom;
    int sign = 1;
    for (const auto& [mu, p] : e.terms)
        for (const auto& [xi, m] : chi) {
            if (!dot_dominant(rs, plus(mu, xi), dom, sign)) continue;
            QPolynomial t = p;
            t *= sign * m;
            out.add(dom, t);
        }
    return out;
}

GlobalWeylExpansion expand_in_global_weyl(const RootSystemData& rs, const IrrepExpansion& c, int N) {
    GlobalWeylExpansion res;
    res.cutoff = N;
    std::map<std::pair<std::int64_t, Weight>, QPolynomial, std::greater<>> residual;
    for (const auto& [w, p] : c.terms) {
        auto t = p.truncated(N);
        if (!t.is_zero()) residual.emplace(std::make_pair(height_key(rs, w), w), t);
    }
    while (!residual.empty()) {
        auto top = residual.begin();
        const Weight nu = top->first.second;
        const QPolynomial p = top->second;
        residual.erase(top);
        if (p.is_zero()) continue;
        if (p.min_degree() < 0) throw CharacterError("expand_in_global_weyl: negative q-degree");
        const QPolynomial m = QPolynomial::mul_truncated(p, hilbert_inverse(nu), N);
        res.multiplicities[nu] = m;
        const auto loc = local_weyl_data(rs, nu);
        res.top_degree[nu] = loc->top;
        if (!(loc->irreps.at(nu) == QPolynomial(1))) throw CharacterError("local Weyl head multiplicity is not 1");
        for (const auto& [eta, lp] : loc->irreps.terms) {
            if (eta == nu) continue;
            QPolynomial sub = QPolynomial::mul_truncated(p, lp, N);
            if (sub.is_zero()) continue;
            sub *= -1;
            auto key = std::make_pair(height_key(rs, eta), eta);
            auto it = residual.find(key);
            if (it == residual.end()) residual.emplace(key, sub);
            else it->second += sub;
        }
    }

    // Rebuild sum m_mu ch W(mu) independently of the elimination order and compare.
    IrrepExpansion rebuilt;
    for (const auto& [nu, m] : res.multiplicities) {
        const QPolynomial mh = QPolynomial::mul_truncated(m, hilbert_series(nu, N), N);
        for (const auto& [eta, lp] : local_weyl_data(rs, nu)->irreps.terms)
            rebuilt.add(eta, QPolynomial::mul_truncated(mh, lp, N));
    }
    res.remainder_zero = rebuilt.terms == c.truncated(N).terms;
    return res;
}

GlobalWeylExpansion expand_in_global_weyl(const RootSystemData& rs, const GradedCharacter& c, int N) {
    auto res = expand_in_global_weyl(rs, to_irreps(rs, c.truncated(N)), N);
    if (res.remainder_zero) {
        GradedCharacter rebuilt;
        for (const auto& [nu, m] : res.multiplicities) {
            const GradedCharacter w = char_global_weyl(rs, nu, N);
            for (const auto& [wt, p] : w.terms) rebuilt.add(wt, QPolynomial::mul_truncated(m, p, N));
        }
        res.remainder_zero = rebuilt.terms == c.truncated(N).terms;
    }
    return res;
}

}  // namespace weylcurrents
