#include "weylcurrents/root_system.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace weylcurrents {

namespace {

std::vector<std::vector<int>> cartan_matrix(Family family, int n) {
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
    switch (family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case Family::D:
            for (int i = 0; i + 2 < n - 1; ++i) link(i, i + 1);
            link(n - 3, n - 2);
            link(n - 3, n - 1);
            break;
        case Family::E:
            // Bourbaki labels: 1-3-4-5-6-7-8 with 2 attached to 4.
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            break;
    }
    return c;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (a[piv][col].numerator() == 0) ++piv;
        std::swap(a[piv], a[col]);
        Rational p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].numerator() == 0) continue;
            Rational f = a[r][col];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

std::size_t expected_positive_roots(Family f, int n) {
    switch (f) {
        case Family::A: return static_cast<std::size_t>(n) * (n + 1) / 2;
        case Family::D: return static_cast<std::size_t>(n) * (n - 1);
        case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    }
    return 0;
}

}  // namespace

std::string RootSystemData::name() const {
    const char c = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
    return std::string(1, c) + std::to_string(rank);
}

Weight RootSystemData::simple_root(int i) const { return cartan.at(i - 1); }

RootSystemData build_root_system(Family family, int rank) {
    bool ok = rank >= 1;
    if (family == Family::D) ok = rank >= 4;
    if (family == Family::E) ok = rank >= 6 && rank <= 8;
    if (!ok) throw RootSystemError("invalid simply-laced type");

    RootSystemData rs;
    rs.family = family;
    rs.rank = rank;
    rs.cartan = cartan_matrix(family, rank);
    rs.inverse_cartan = invert(rs.cartan);

    const int n = rank;
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<int> c(n, 0);
        c[i] = 1;
        seen.insert(c);
        queue.push_back(c);
    }
    while (!queue.empty()) {
        auto c = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            int pairing = 0;
            for (int j = 0; j < n; ++j) pairing += rs.cartan[i][j] * c[j];
            if (pairing == 0) continue;
            auto d = c;
            d[i] -= pairing;
            if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) continue;
            if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) continue;
            if (seen.insert(d).second) queue.push_back(d);
        }
    }
    std::vector<std::vector<int>> roots(seen.begin(), seen.end());
    std::stable_sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });
    if (roots.size() != expected_positive_roots(family, rank))
        throw RootSystemError("root closure produced an unexpected count");
    for (const auto& c : roots) {
        rs.positive_roots_simple.push_back(c);
        rs.positive_roots.push_back(from_root_coords(rs, c));
    }
    rs.highest_root = rs.positive_roots.back();
    rs.rho = Weight(n, 1);
    for (const auto& row : rs.inverse_cartan)
        for (const auto& x : row) rs.inverse_denominator = std::lcm(rs.inverse_denominator, x.denominator());
    for (int i = 0; i < n; ++i) {
        Rational r(0);
        for (int j = 0; j < n; ++j) r += rs.inverse_cartan[i][j];
        rs.height_coeff.push_back((r * rs.inverse_denominator).numerator());
    }
    const auto& top = roots.back();
    rs.dual_coxeter = std::accumulate(top.begin(), top.end(), 0) + 1;
    return rs;
}

RootSystemData build_root_system(const std::string& type) {
    if (type.size() < 2) throw RootSystemError("type must look like A2, D4 or E6");
    Family f;
    switch (type[0]) {
        case 'A': case 'a': f = Family::A; break;
        case 'D': case 'd': f = Family::D; break;
        case 'E': case 'e': f = Family::E; break;
        default: throw RootSystemError("unsupported family '" + type.substr(0, 1) + "'");
    }
    int rank = 0;
    for (std::size_t i = 1; i < type.size(); ++i) {
        if (type[i] < '0' || type[i] > '9') throw RootSystemError("bad rank in '" + type + "'");
        rank = rank * 10 + (type[i] - '0');
        if (rank > 64) throw RootSystemError("rank too large");
    }
    return build_root_system(f, rank);
}

Weight reflect(const RootSystemData& rs, int i, const Weight& lambda) {
    if (i < 1 || i > rs.rank) throw std::out_of_range("simple root index out of range");
    Weight out = lambda;
    const int p = lambda[i - 1];
    if (p != 0)
        for (int j = 0; j < rs.rank; ++j) out[j] -= p * rs.cartan[i - 1][j];
    return out;
}

Rational inner(const RootSystemData& rs, const Weight& lambda, const Weight& mu) {
    Rational s(0);
    for (int i = 0; i < rs.rank; ++i) {
        if (lambda[i] == 0) continue;
        Rational row(0);
        for (int j = 0; j < rs.rank; ++j)
            if (mu[j] != 0) row += rs.inverse_cartan[i][j] * mu[j];
        s += row * lambda[i];
    }
    return s;
}

bool to_root_coords(const RootSystemData& rs, const Weight& lambda, std::vector<int>& out) {
    out.assign(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i) {
        Rational s(0);
        for (int j = 0; j < rs.rank; ++j) s += rs.inverse_cartan[i][j] * lambda[j];
        if (s.denominator() != 1) return false;
        out[i] = static_cast<int>(s.numerator());
    }
    return true;
}

Weight from_root_coords(const RootSystemData& rs, const std::vector<int>& c) {
    Weight w(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) w[i] += rs.cartan[i][j] * c[j];
    return w;
}

bool in_root_lattice(const RootSystemData& rs, const Weight& lambda) {
    std::vector<int> c;
    return to_root_coords(rs, lambda, c);
}

bool dominance_leq(const RootSystemData& rs, const Weight& lambda, const Weight& mu) {
    Weight d(rs.rank);
    for (int i = 0; i < rs.rank; ++i) d[i] = mu[i] - lambda[i];
    std::vector<int> c;
    if (!to_root_coords(rs, d, c)) return false;
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

bool is_dominant(const Weight& lambda) {
    return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x >= 0; });
}

std::int64_t height_key(const RootSystemData& rs, const Weight& lambda) {
    std::int64_t s = 0;
    for (int i = 0; i < rs.rank; ++i) s += rs.height_coeff[i] * lambda[i];
    return s;
}

DominantResult dominant_rep(const RootSystemData& rs, const Weight& lambda) {
    DominantResult r{lambda, 0};
    for (;;) {
        int i = 0;
        while (i < rs.rank && r.weight[i] >= 0) ++i;
        if (i == rs.rank) return r;
        const int p = r.weight[i];
        for (int j = 0; j < rs.rank; ++j) r.weight[j] -= p * rs.cartan[i][j];
        ++r.reflections;
    }
}

bool dot_dominant(const RootSystemData& rs, const Weight& lambda, Weight& out, int& sign) {
    Weight v = lambda;
    for (int& x : v) ++x;
    auto d = dominant_rep(rs, v);
    for (int x : d.weight)
        if (x == 0) return false;
    out = d.weight;
    for (int& x : out) --x;
    sign = (d.reflections % 2) ? -1 : 1;
    return true;
}

std::vector<Weight> weyl_orbit(const RootSystemData& rs, const Weight& dominant) {
    std::vector<Weight> orbit{dominant};
    std::set<Weight> seen{dominant};
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (int i = 1; i <= rs.rank; ++i) {
            if (orbit[k][i - 1] <= 0) continue;
            Weight w = reflect(rs, i, orbit[k]);
            if (seen.insert(w).second) orbit.push_back(std::move(w));
        }
    }
    return orbit;
}

WeightMultiplicities freudenthal_dominant(const RootSystemData& rs, const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("freudenthal: weight is not dominant");
    std::vector<Weight> dom{lambda};
    std::set<Weight> seen{lambda};
    for (std::size_t k = 0; k < dom.size(); ++k) {
        for (const auto& a : rs.positive_roots) {
            Weight w = dom[k];
            for (int j = 0; j < rs.rank; ++j) w[j] -= a[j];
            if (is_dominant(w) && seen.insert(w).second) dom.push_back(std::move(w));
        }
    }
    std::sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) {
        auto ha = height_key(rs, a), hb = height_key(rs, b);
        return ha != hb ? ha > hb : a > b;
    });

    Weight lr = lambda;
    for (int& x : lr) ++x;
    const Rational top = inner(rs, lr, lr);

    WeightMultiplicities mult;
    mult[lambda] = 1;
    for (std::size_t k = 1; k < dom.size(); ++k) {
        const Weight& mu = dom[k];
        Rational sum(0);
        for (const auto& a : rs.positive_roots) {
            Weight nu = mu;
            for (;;) {
                for (int j = 0; j < rs.rank; ++j) nu[j] += a[j];
                auto d = dominant_rep(rs, nu).weight;
                auto it = mult.find(d);
                if (it == mult.end()) break;
                sum += inner(rs, nu, a) * it->second;
            }
        }
        Weight mr = mu;
        for (int& x : mr) ++x;
        Rational m = 2 * sum / (top - inner(rs, mr, mr));
        if (m.denominator() != 1) throw std::logic_error("freudenthal: non-integral multiplicity");
        if (m.numerator() != 0) mult[mu] = m.numerator();
    }
    return mult;
}

WeightMultiplicities freudenthal_weights(const RootSystemData& rs, const Weight& lambda) {
    WeightMultiplicities out;
    for (const auto& [mu, m] : freudenthal_dominant(rs, lambda))
        for (auto& w : weyl_orbit(rs, mu)) out[w] = m;
    return out;
}

std::int64_t weyl_dimension(const RootSystemData& rs, const Weight& lambda) {
    using boost::multiprecision::cpp_int;
    cpp_int num = 1, den = 1;
    const std::int64_t scale = rs.inverse_denominator;
    Weight lr = lambda;
    for (int& x : lr) ++x;
    for (const auto& a : rs.positive_roots) {
        num *= (inner(rs, lr, a) * scale).numerator();
        den *= (inner(rs, rs.rho, a) * scale).numerator();
    }
    if (num % den != 0) throw std::logic_error("weyl dimension not integral");
    return static_cast<std::int64_t>(num / den);
}

std::vector<std::vector<std::vector<int>>> weyl_group_elements(const RootSystemData& rs,
                                                                std::size_t limit) {
    using Mat = std::vector<std::vector<int>>;
    const int n = rs.rank;
    Mat id(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    std::vector<Mat> gens;
    for (int i = 0; i < n; ++i) {
        Mat s = id;
        // s_i(e_j) = e_j - delta_ij alpha_i, columns are images of basis vectors
        for (int r = 0; r < n; ++r) s[r][i] -= rs.cartan[i][r];
        gens.push_back(s);
    }
    std::vector<Mat> out{id};
    std::set<Mat> seen{id};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const auto& g : gens) {
            Mat p(n, std::vector<int>(n, 0));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    for (int t = 0; t < n; ++t) p[r][c] += g[r][t] * out[k][t][c];
            if (seen.insert(p).second) {
                out.push_back(p);
                if (out.size() > limit) throw std::length_error("Weyl group too large to enumerate");
            }
        }
    }
    return out;
}

std::string weight_to_string(const Weight& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ']';
    return os.str();
}

}  // namespace weylcurrents
