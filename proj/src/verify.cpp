#include "weylcurrents/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace weylcurrents {

namespace {

struct GridEntry {
    std::string type;
    int max_mu = 0;
    int max_k = 0;
};

class Collector {
public:
    explicit Collector(std::string name) { report_.suite = std::move(name); }

    void check(bool ok, const std::function<std::string()>& what) {
        std::lock_guard<std::mutex> lock(mu_);
        ++report_.checks;
        if (!ok) report_.failures.push_back(what());
    }
    void fail(const std::string& what) {
        std::lock_guard<std::mutex> lock(mu_);
        ++report_.checks;
        report_.failures.push_back(what);
    }
    SuiteReport finish(std::chrono::steady_clock::time_point t0) {
        report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return report_;
    }

private:
    std::mutex mu_;
    SuiteReport report_;
};

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    unsigned t = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
    t = static_cast<unsigned>(std::min<std::size_t>(t, count));
    if (t <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

// Runs fn on every item, turning exceptions into failures.
template <class Item>
void run_items(Collector& c, const std::vector<Item>& items, int threads, const std::function<std::string(const Item&)>& label,
               const std::function<void(const Item&)>& fn) {
    parallel_for(items.size(), threads, [&](std::size_t i) {
        try {
            fn(items[i]);
        } catch (const std::exception& e) {
            c.fail(label(items[i]) + ": " + e.what());
        }
    });
}

std::vector<GridEntry> grid_for(const VerifyOptions& opt, std::vector<GridEntry> defaults, int fallback_mu = 2,
                                int fallback_k = 2) {
    std::vector<GridEntry> out;
    if (opt.type) {
        const auto rs = build_root_system(*opt.type);
        GridEntry g{rs.name(), fallback_mu, fallback_k};
        for (const auto& d : defaults)
            if (d.type == g.type) g = d;
        out.push_back(g);
    } else {
        out = std::move(defaults);
    }
    for (auto& g : out) {
        if (opt.max_mu) g.max_mu = *opt.max_mu;
        if (opt.max_factors) g.max_mu = *opt.max_factors;
        if (opt.max_k) g.max_k = *opt.max_k;
    }
    return out;
}

void require_type_a(const RootSystemData& rs, const std::string& suite) {
    if (rs.family != Family::A) throw std::invalid_argument(suite + " runs on type A only");
}

std::string mu_label(const std::string& type, const Weight& mu, std::optional<int> k = std::nullopt) {
    std::string s = type + " mu=" + weight_to_string(mu);
    if (k) s += " k=" + std::to_string(*k);
    return s;
}

using LaurentMap = std::map<Weight, QPolynomial>;

void add_to(LaurentMap& m, const Weight& w, const QPolynomial& p) {
    auto& slot = m[w];
    slot += p;
    if (slot.is_zero()) m.erase(w);
}

LaurentMap truncate_map(const LaurentMap& m, int N) {
    LaurentMap out;
    for (const auto& [w, p] : m) {
        auto t = p.truncated(N);
        if (!t.is_zero()) out.emplace(w, std::move(t));
    }
    return out;
}

std::string describe_diff(const LaurentMap& a, const LaurentMap& b) {
    std::set<Weight> keys;
    for (const auto& [w, p] : a) keys.insert(w);
    for (const auto& [w, p] : b) keys.insert(w);
    for (const auto& w : keys) {
        auto ia = a.find(w);
        auto ib = b.find(w);
        QPolynomial pa = ia == a.end() ? QPolynomial() : ia->second;
        QPolynomial pb = ib == b.end() ? QPolynomial() : ib->second;
        if (!(pa == pb)) return "at " + weight_to_string(w) + ": " + pa.to_string() + " vs " + pb.to_string();
    }
    return "no difference";
}

}  // namespace

const CrystalGraph& GraphStore::get(int n, const Weight& mu) {
    auto key = std::make_pair(n, heights_of(mu));
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = graphs_.find(key);
        if (it != graphs_.end()) return *it->second;
    }
    auto g = std::make_shared<CrystalGraph>(load_or_build(n, key.second, dir_));
    std::lock_guard<std::mutex> lock(mu_);
    return *graphs_.try_emplace(key, std::move(g)).first->second;
}

std::vector<Weight> level_weights(const RootSystemData& rs, int k) {
    std::vector<Weight> out;
    Weight w(rs.rank, 0);
    for (;;) {
        if (theta_pairing(rs, w) <= k) out.push_back(w);
        int i = 0;
        while (i < rs.rank && w[i] == k) w[i++] = 0;
        if (i == rs.rank) break;
        ++w[i];
    }
    return out;
}

std::vector<Weight> bounded_dominant(int rank, int bound) {
    std::vector<Weight> out;
    Weight w(rank, 0);
    for (;;) {
        int s = 0;
        for (int x : w) s += x;
        if (s <= bound) out.push_back(w);
        int i = 0;
        while (i < rank && w[i] == bound) w[i++] = 0;
        if (i == rank) break;
        ++w[i];
    }
    return out;
}

SuiteReport verify_cross_route(const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Collector c("cross-route");
    const int N = opt.N.value_or(12);
    GraphStore store(opt.cache_dir);
    struct Item {
        std::string type;
        Weight mu;
        int k;
    };
    std::vector<Item> items;
    for (const auto& g : grid_for(opt, {{"A1", 6, 3}, {"A2", 3, 2}})) {
        const auto rs = build_root_system(g.type);
        require_type_a(rs, "cross-route");
        for (const auto& mu : bounded_dominant(rs.rank, g.max_mu))
            for (int k = 1; k <= g.max_k; ++k) items.push_back({g.type, mu, k});
    }
    run_items<Item>(
        c, items, opt.threads, [](const Item& it) { return mu_label(it.type, it.mu, it.k); },
        [&](const Item& it) {
            const auto rs = build_root_system(it.type);
            const auto& graph = store.get(rs.rank, it.mu);
            for (const auto& lambda : level_weights(rs, it.k)) {
                const auto xp = X_restricted(rs.rank, it.mu, lambda, it.k, &graph);
                const auto xa = X_alt_sum(rs, it.mu, lambda, it.k, &graph);
                const auto pc = P_restricted(rs, it.mu, lambda, it.k, N);
                c.check(xp == xa && xa == pc, [&] {
                    return mu_label(it.type, it.mu, it.k) + " lambda=" + weight_to_string(lambda) +
                           ": paths=" + xp.to_string() + " altsum=" + xa.to_string() + " chars=" + pc.to_string();
                });
            }
        });
    return c.finish(t0);
}

SuiteReport verify_desk_values(const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Collector c("desk-values");
    const auto a1 = build_root_system("A1");
    const QPolynomial q = QPolynomial::monomial(1), one(1);
    auto expect = [&](const std::string& name, const std::function<QPolynomial()>& f, const QPolynomial& want) {
        try {
            const auto got = f();
            c.check(got == want, [&] { return name + " = " + got.to_string() + ", expected " + want.to_string(); });
        } catch (const std::exception& e) {
            c.fail(name + ": " + e.what());
        }
    };
    expect("X^(1)_{2w,0}", [] { return X_restricted(1, {2}, {0}, 1); }, q);
    expect("X_{2w,0}", [] { return X_poly(1, {2}, {0}); }, q);
    expect("X_{2w,2w}", [] { return X_poly(1, {2}, {2}); }, one);
    for (int k = 1; k <= opt.max_k.value_or(3); ++k)
        expect("P^(" + std::to_string(k) + ")_{0,0}", [&] { return P_restricted(a1, {0}, {0}, k, opt.N.value_or(12)); },
               one);
    return c.finish(t0);
}

SuiteReport verify_level_one(const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Collector c("level-one");
    const int N = opt.N.value_or(10);
    struct Item {
        std::string type;
        Weight varpi;
    };
    std::vector<Item> items;
    if (opt.type) {
        const auto rs = build_root_system(*opt.type);
        for (const auto& w : level_weights(rs, 1)) items.push_back({rs.name(), w});
    } else {
        for (const char* t : {"A1", "A2", "A3"}) {
            const auto rs = build_root_system(t);
            for (const auto& w : level_weights(rs, 1)) items.push_back({t, w});
        }
        items.push_back({"D4", Weight(4, 0)});
    }
    run_items<Item>(
        c, items, opt.threads, [](const Item& it) { return mu_label(it.type, it.varpi); },
        [&](const Item& it) {
            const auto rs = build_root_system(it.type);
            const auto e = expand_in_global_weyl(rs, integrable_irreps(rs, it.varpi, 1, N), N);
            const std::string where = it.type + " varpi=" + weight_to_string(it.varpi);
            c.check(e.remainder_zero, [&] { return where + ": nonzero remainder"; });
            // every dominant nu in varpi + Q with exponent <= N
            std::set<Weight> expected;
            const double vn = std::sqrt(boost::rational_cast<double>(inner(rs, it.varpi, it.varpi)));
            const double radius = vn + std::sqrt(2.0 * N + vn * vn) + 1e-7;
            for (const auto& gam : root_lattice_ball(rs, radius)) {
                Weight nu = it.varpi;
                for (int i = 0; i < rs.rank; ++i) nu[i] += gam[i];
                if (!is_dominant(nu)) continue;
                const Rational ex = level_one_exponent(rs, it.varpi, nu);
                if (ex > N) continue;
                expected.insert(nu);
                const QPolynomial want = QPolynomial::monomial(static_cast<int>(ex.numerator()));
                auto f = e.multiplicities.find(nu);
                const QPolynomial got = f == e.multiplicities.end() ? QPolynomial() : f->second;
                c.check(got == want && e.trusted(nu), [&] {
                    return where + " nu=" + weight_to_string(nu) + ": " + got.to_string() + ", expected " +
                           want.to_string() + (e.trusted(nu) ? "" : " (outside trusted window)");
                });
            }
            for (const auto& [nu, p] : e.multiplicities)
                c.check(expected.count(nu) > 0,
                        [&] { return where + ": unexpected constituent " + weight_to_string(nu) + " " + p.to_string(); });
        });
    return c.finish(t0);
}

SuiteReport verify_frenkel_kac(const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Collector c("frenkel-kac");
    const int N = opt.N.value_or(10);
    struct Item {
        std::string type;
        Weight varpi;
    };
    std::vector<Item> items;
    std::vector<std::string> types = {"A1", "A2", "A3"};
    if (opt.type) types = {*opt.type};
    for (const auto& t : types) {
        const auto rs = build_root_system(t);
        for (const auto& w : level_weights(rs, 1)) items.push_back({rs.name(), w});
    }
    run_items<Item>(
        c, items, opt.threads, [](const Item& it) { return mu_label(it.type, it.varpi); },
        [&](const Item& it) {
            const auto rs = build_root_system(it.type);
            QPolynomial heis(1);
            const auto euler = inverse_q_pochhammer(N, N);
            for (int r = 0; r < rs.rank; ++r) heis = QPolynomial::mul_truncated(heis, euler, N);
            LaurentMap oracle;
            const double vn = std::sqrt(boost::rational_cast<double>(inner(rs, it.varpi, it.varpi)));
            for (const auto& gam : root_lattice_ball(rs, vn + std::sqrt(2.0 * N + vn * vn) + 1e-7)) {
                const Rational ex = inner(rs, it.varpi, gam) + inner(rs, gam, gam) / 2;
                if (ex > N) continue;
                Weight nu = it.varpi;
                for (int i = 0; i < rs.rank; ++i) nu[i] += gam[i];
                add_to(oracle, nu, heis.shifted(static_cast<int>(ex.numerator())).truncated(N));
            }
            const auto ch = char_integrable(rs, it.varpi, 1, N);
            const auto got = truncate_map(ch.terms, N);
            c.check(got == oracle, [&] {
                return it.type + " varpi=" + weight_to_string(it.varpi) + " " + describe_diff(got, oracle);
            });
        });
    return c.finish(t0);
}

SuiteReport verify_energy_axioms(const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Collector c("energy-axioms");
    GraphStore store(opt.cache_dir);
    struct Item {
        std::string type;
        Weight mu;
    };
    std::vector<Item> items;
    for (const auto& g : grid_for(opt, {{"A1", 6, 0}, {"A2", 3, 0}}, 3)) {
        const auto rs = build_root_system(g.type);
        require_type_a(rs, "energy-axioms");
        for (const auto& mu : bounded_dominant(rs.rank, g.max_mu))
            if (std::any_of(mu.begin(), mu.end(), [](int x) { return x > 0; })) items.push_back({g.type, mu});
    }
    run_items<Item>(
        c, items, opt.threads, [](const Item& it) { return mu_label(it.type, it.mu); },
        [&](const Item& it) {
            const auto rs = build_root_system(it.type);
            const auto report = check_crystal_graph(store.get(rs.rank, it.mu));
            if (report.ok) {
                c.check(true, [] { return std::string(); });
                return;
            }
            for (const auto& f : report.failures) c.fail(mu_label(it.type, it.mu) + ": " + f);
        });
    if (!opt.type) {
        try {
            c.check(calibrate_energy_orientation() == kEnergyOrientation,
                    [] { return std::string("energy orientation calibration disagrees with the compiled sign"); });
        } catch (const std::exception& e) {
            c.fail(std::string("calibration: ") + e.what());
        }
    }
    return c.finish(t0);
}

SuiteReport verify_demazure_vs_crystal(const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Collector c("demazure-vs-crystal");
    const int N = opt.N.value_or(8);
    GraphStore store(opt.cache_dir);
    struct Item {
        std::string type;
        Weight mu;
    };
    std::vector<Item> items;
    for (const auto& g : grid_for(opt, {{"A1", 4, 0}, {"A2", 2, 0}})) {
        const auto rs = build_root_system(g.type);
        require_type_a(rs, "demazure-vs-crystal");
        for (const auto& mu : bounded_dominant(rs.rank, g.max_mu)) items.push_back({g.type, mu});
    }
    run_items<Item>(
        c, items, opt.threads, [](const Item& it) { return mu_label(it.type, it.mu); },
        [&](const Item& it) {
            const auto rs = build_root_system(it.type);
            const auto& g = store.get(rs.rank, it.mu);
            LaurentMap crystal;
            for (std::size_t v = 0; v < g.vertices.size(); ++v)
                add_to(crystal, g.wt[v], QPolynomial::monomial(-g.energy[v]));
            const auto dem = truncate_map(char_local_weyl(rs, it.mu, N).terms, N);
            crystal = truncate_map(crystal, N);
            c.check(dem == crystal, [&] { return mu_label(it.type, it.mu) + " " + describe_diff(dem, crystal); });
        });
    return c.finish(t0);
}

SuiteReport verify_demazure_limit(const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Collector c("demazure-limit");
    const int N = opt.N.value_or(6);
    const int k = opt.max_k.value_or(1);
    const auto rs = build_root_system(opt.type.value_or("A1"));
    const int rounds_cap = 200;
    struct Item {
        Weight lambda;
    };
    std::vector<Item> items;
    for (const auto& w : level_weights(rs, k)) items.push_back({w});
    run_items<Item>(
        c, items, opt.threads, [&](const Item& it) { return mu_label(rs.name(), it.lambda, k); },
        [&](const Item& it) {
            AffineCharacter ch = AffineCharacter::single({it.lambda, k, 0});
            auto project = [&](const AffineCharacter& a) {
                LaurentMap m;
                for (const auto& [w, p] : a.terms) {
                    auto t = p.inverted().truncated(N);
                    if (!t.is_zero()) m.emplace(w, std::move(t));
                }
                return m;
            };
            LaurentMap prev = project(ch);
            int stable = 0, rounds = 0;
            while (stable < 2 && rounds < rounds_cap) {
                for (int i = 0; i <= rs.rank; ++i) ch = demazure_step(rs, i, ch);
                ++rounds;
                LaurentMap cur = project(ch);
                stable = cur == prev ? stable + 1 : 0;
                prev = std::move(cur);
            }
            const std::string where = mu_label(rs.name(), it.lambda, k);
            c.check(stable >= 2, [&] { return where + ": no stabilisation within " + std::to_string(rounds_cap) + " rounds"; });
            const auto wk = truncate_map(char_integrable(rs, it.lambda, k, N).terms, N);
            c.check(prev == wk, [&] { return where + " after " + std::to_string(rounds) + " rounds " + describe_diff(prev, wk); });
        });
    return c.finish(t0);
}

SuiteReport verify_vertex_identity(const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Collector c("vertex-identity");
    const int N = opt.N.value_or(8);
    GraphStore store(opt.cache_dir);
    struct Item {
        std::string type;
        Weight mu;
        int k;
    };
    std::vector<Item> items;
    for (const auto& g : grid_for(opt, {{"A1", 6, 3}, {"A2", 3, 2}})) {
        const auto rs = build_root_system(g.type);
        require_type_a(rs, "vertex-identity");
        for (const auto& mu : bounded_dominant(rs.rank, g.max_mu))
            for (int k = 1; k <= g.max_k; ++k) items.push_back({g.type, mu, k});
    }
    run_items<Item>(
        c, items, opt.threads, [](const Item& it) { return mu_label(it.type, it.mu, it.k); },
        [&](const Item& it) {
            const auto rs = build_root_system(it.type);
            const auto& g = store.get(rs.rank, it.mu);
            // chi(e^{k Lambda_0 + wt b}) = sign q^{-shift} ch L_k(dominant), or 0 on a wall
            LaurentMap lhs, rhs;
            for (std::size_t v = 0; v < g.vertices.size(); ++v) {
                const auto rep = dominant_dot_rep(rs, g.wt[v], it.k);
                if (!rep) continue;
                QPolynomial t = QPolynomial::monomial(g.energy[v] - rep->delta_shift);
                t *= rep->sign;
                add_to(lhs, rep->dominant, t);
            }
            for (const auto& p : restricted_paths(rs.rank, it.mu, it.k, &g)) add_to(rhs, p.wt, QPolynomial::monomial(p.D));
            lhs = truncate_map(lhs, N);
            rhs = truncate_map(rhs, N);
            c.check(lhs == rhs, [&] { return mu_label(it.type, it.mu, it.k) + " " + describe_diff(lhs, rhs); });
        });
    return c.finish(t0);
}

SuiteReport verify_length_oracle(const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Collector c("length-oracle");
    const int max_len = opt.max_mu.value_or(6);
    std::vector<std::string> types = {"A1", "A2"};
    if (opt.type) types = {*opt.type};
    for (const auto& t : types) {
        try {
            const auto rs = build_root_system(t);
            std::vector<AffineWeylElement> gens;
            for (int i = 0; i <= rs.rank; ++i) gens.push_back(affine_simple_reflection(rs, i));
            // breadth-first search on the Cayley graph
            std::set<AffineWeylElement> seen{affine_identity(rs)};
            std::vector<AffineWeylElement> frontier{affine_identity(rs)};
            for (int d = 0; d <= max_len; ++d) {
                for (const auto& g : frontier) {
                    const int l = length(rs, g);
                    c.check(l == d, [&] {
                        return t + ": length " + std::to_string(l) + " but Cayley distance " + std::to_string(d);
                    });
                    const auto word = reduced_word(rs, g);
                    c.check(static_cast<int>(word.size()) == d && from_word(rs, word) == g,
                            [&] { return t + ": reduced_word does not reproduce an element at distance " + std::to_string(d); });
                }
                std::vector<AffineWeylElement> next;
                for (const auto& g : frontier)
                    for (const auto& s : gens) {
                        auto h = compose(g, s);
                        if (seen.insert(h).second) next.push_back(std::move(h));
                    }
                frontier = std::move(next);
            }
            // random words: parity, subadditivity and the exchange property
            std::mt19937_64 rng(opt.seed);
            std::uniform_int_distribution<int> letter(0, rs.rank);
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<int> word(1 + trial % 16);
                for (int& x : word) x = letter(rng);
                const auto g = from_word(rs, word);
                const int l = length(rs, g);
                const int i = letter(rng);
                const int l2 = length(rs, compose(g, gens[i]));
                c.check(l <= static_cast<int>(word.size()) && (word.size() - l) % 2 == 0 && std::abs(l2 - l) == 1 &&
                            finite_sign(g.finite) == (l % 2 ? -1 : 1),
                        [&] {
                            std::ostringstream os;
                            os << t << ": random word of length " << word.size() << " has length " << l;
                            return os.str();
                        });
            }
        } catch (const std::exception& e) {
            c.fail(t + ": " + e.what());
        }
    }
    return c.finish(t0);
}

SuiteReport verify_structural(const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Collector c("structural");
    // Yang-Baxter for the combinatorial R-matrix, exhaustive on small columns.
    for (int n = 1; n <= 2; ++n) {
        const int hmax = std::min(2, n);
        for (int h1 = 1; h1 <= hmax; ++h1)
            for (int h2 = 1; h2 <= hmax; ++h2)
                for (int h3 = 1; h3 <= hmax; ++h3)
                    for (const auto& x : columns(n, h1))
                        for (const auto& y : columns(n, h2))
                            for (const auto& z : columns(n, h3)) {
                                auto r12 = [&](TensorElement b) {
                                    std::tie(b[0], b[1]) = combinatorial_R(n, b[0], b[1]);
                                    return b;
                                };
                                auto r23 = [&](TensorElement b) {
                                    std::tie(b[1], b[2]) = combinatorial_R(n, b[1], b[2]);
                                    return b;
                                };
                                const TensorElement b{x, y, z};
                                const auto lhs = r12(r23(r12(b)));
                                const auto rhs = r23(r12(r23(b)));
                                c.check(lhs == rhs, [&] { return "Yang-Baxter fails on " + element_to_string(b); });
                            }
    }
    // dim W(lambda,0) = prod_i dim W(varpi_i,0)^{m_i}
    auto dim_local = [](const RootSystemData& rs, const Weight& lam) {
        BigInt d = 0;
        for (const auto& [nu, p] : local_weyl_irreps(rs, lam).terms) d += p.at_one() * weyl_dimension(rs, nu);
        return d;
    };
    for (const auto& g : grid_for(opt, {{"A1", 6, 3}, {"A2", 3, 2}, {"A3", 2, 1}, {"D4", 1, 1}})) {
        try {
            const auto rs = build_root_system(g.type);
            std::vector<BigInt> fund;
            for (int i = 0; i < rs.rank; ++i) {
                Weight w(rs.rank, 0);
                w[i] = 1;
                fund.push_back(dim_local(rs, w));
            }
            for (const auto& lam : bounded_dominant(rs.rank, g.max_mu)) {
                BigInt want = 1;
                for (int i = 0; i < rs.rank; ++i)
                    for (int m = 0; m < lam[i]; ++m) want *= fund[i];
                const BigInt got = dim_local(rs, lam);
                c.check(got == want, [&] {
                    std::ostringstream os;
                    os << g.type << " dim W(" << weight_to_string(lam) << ",0) = " << got << ", expected " << want;
                    return os.str();
                });
            }
        } catch (const std::exception& e) {
            c.fail(g.type + " dimensions: " + e.what());
        }
    }
    // positivity of every extracted multiplicity on the cross-route grid
    const int N = opt.N.value_or(12);
    struct Item {
        std::string type;
        Weight lambda;
        int k;
    };
    std::vector<Item> items;
    for (const auto& g : grid_for(opt, {{"A1", 6, 3}, {"A2", 3, 2}})) {
        const auto rs = build_root_system(g.type);
        for (int k = 1; k <= g.max_k; ++k)
            for (const auto& lam : level_weights(rs, k)) items.push_back({g.type, lam, k});
    }
    run_items<Item>(
        c, items, opt.threads, [](const Item& it) { return mu_label(it.type, it.lambda, it.k); },
        [&](const Item& it) {
            const auto rs = build_root_system(it.type);
            const auto& e = restricted_expansion(rs, it.lambda, it.k, N);
            for (const auto& [mu, p] : e.multiplicities)
                c.check(p.nonnegative(), [&] {
                    return it.type + " (L_" + std::to_string(it.k) + "(" + weight_to_string(it.lambda) + ") : W(" +
                           weight_to_string(mu) + ")) = " + p.to_string() + " has a negative coefficient";
                });
        });
    auto length_report = verify_length_oracle(opt);
    for (long i = 0; i < length_report.checks; ++i) c.check(true, [] { return std::string(); });
    for (const auto& f : length_report.failures) c.fail("length: " + f);
    return c.finish(t0);
}

std::vector<std::string> suite_names() {
    return {"energy-axioms", "cross-route",  "level-one",    "demazure-vs-crystal", "frenkel-kac",
            "length-oracle", "vertex-identity", "desk-values", "demazure-limit",      "structural"};
}

std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& opt) {
    static const std::map<std::string, std::function<SuiteReport(const VerifyOptions&)>> table = {
        {"energy-axioms", verify_energy_axioms},
        {"cross-route", verify_cross_route},
        {"level-one", verify_level_one},
        {"demazure-vs-crystal", verify_demazure_vs_crystal},
        {"frenkel-kac", verify_frenkel_kac},
        {"length-oracle", verify_length_oracle},
        {"vertex-identity", verify_vertex_identity},
        {"desk-values", verify_desk_values},
        {"demazure-limit", verify_demazure_limit},
        {"structural", verify_structural},
    };
    if (name == "all") {
        std::vector<SuiteReport> out;
        for (const auto& n : suite_names()) out.push_back(table.at(n)(opt));
        return out;
    }
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    return {it->second(opt)};
}

}  // namespace weylcurrents
