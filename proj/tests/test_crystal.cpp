#include "weylcurrents/crystal.hpp"
#include "weylcurrents/kostka.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <numeric>

using namespace weylcurrents;

namespace {

QPolynomial q(int e) { return QPolynomial::monomial(e); }

QPolynomial q_binomial(int n, int j) {
    if (j < 0 || j > n) return {};
    // Pascal: [n,j] = [n-1,j-1] + q^j [n-1,j]
    std::vector<std::vector<QPolynomial>> t(n + 1, std::vector<QPolynomial>(n + 1));
    for (int a = 0; a <= n; ++a) {
        t[a][0] = q(0);
        for (int b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? q(b) * t[a - 1][b] : QPolynomial());
    }
    return t[n][j];
}

// Sum of q^{maj T} over standard Young tableaux of the given shape.
QPolynomial maj_generating(const std::vector<int>& shape) {
    const int total = std::accumulate(shape.begin(), shape.end(), 0);
    QPolynomial out;
    std::vector<int> filled(shape.size(), 0);
    std::vector<int> row_of(total + 1, 0);
    std::function<void(int)> place = [&](int entry) {
        if (entry > total) {
            int maj = 0;
            for (int i = 1; i < total; ++i)
                if (row_of[i + 1] > row_of[i]) maj += i;
            out += q(maj);
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (filled[r] >= shape[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            ++filled[r];
            row_of[entry] = static_cast<int>(r);
            place(entry + 1);
            --filled[r];
        }
    };
    place(1);
    return out;
}

}  // namespace

TEST_CASE("single column crystal of A1") {
    const auto g = build_crystal_graph(1, {1});
    REQUIRE(g.vertices.size() == 2);
    CHECK(element_to_string(g.vertices[0]) == "{1}");
    CHECK(element_to_string(g.vertices[1]) == "{2}");
    CHECK(g.f_arrow[1][0] == 1);
    CHECK(g.f_arrow[0][1] == 0);
    CHECK(g.f_arrow[1][1] == -1);
    CHECK(g.f_arrow[0][0] == -1);
}

TEST_CASE("B_loc(2w) of A1 and its energy") {
    const auto g = build_crystal_graph(1, heights_of({2}));
    REQUIRE(g.vertices.size() == 4);
    CHECK(g.energy == std::vector<int>{0, -1, 0, 0});
    CHECK(energy_D(1, {ColumnElement::from_letters({1}), ColumnElement::from_letters({2})}) == -1);
    CHECK(check_crystal_graph(g).ok);
}

TEST_CASE("column operators") {
    const auto c = ColumnElement::from_letters({1, 3});
    CHECK(c.height() == 2);
    CHECK(column_weight(2, c) == Weight{1, -1});
    auto f2 = column_apply(2, CrystalOp::F, 2, c);
    CHECK_FALSE(f2.has_value());
    auto f1 = column_apply(2, CrystalOp::F, 1, c);
    REQUIRE(f1.has_value());
    CHECK(f1->letters() == std::vector<int>{2, 3});
    CHECK_FALSE(column_apply(2, CrystalOp::F, 0, c).has_value());
    auto f0 = column_apply(2, CrystalOp::F, 0, ColumnElement::from_letters({2, 3}));  // f_0 sends n+1 to 1
    REQUIRE(f0.has_value());
    CHECK(f0->letters() == std::vector<int>{1, 2});
    CHECK(columns(3, 2).size() == 6);
}

TEST_CASE("promotion conjugates f_i to f_{i+1} on columns") {
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= n; ++r)
            for (const auto& c : columns(n, r)) {
                auto shift = [&](const ColumnElement& x) {
                    std::vector<int> l;
                    for (int j : x.letters()) l.push_back(j % (n + 1) + 1);
                    std::sort(l.begin(), l.end());
                    return ColumnElement::from_letters(l);
                };
                for (int i = 0; i <= n; ++i) {
                    const auto a = column_apply(n, CrystalOp::F, i, c);
                    const auto b = column_apply(n, CrystalOp::F, (i + 1) % (n + 1), shift(c));
                    REQUIRE(a.has_value() == b.has_value());
                    if (a) CHECK(shift(*a) == *b);
                }
            }
}

TEST_CASE("combinatorial R is an involutive affine crystal isomorphism") {
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s)
                for (const auto& b : columns(n, r))
                    for (const auto& c : columns(n, s)) {
                        const auto [c2, b2] = combinatorial_R(n, b, c);
                        CHECK(c2.height() == s);
                        CHECK(b2.height() == r);
                        const auto back = combinatorial_R(n, c2, b2);
                        CHECK(back.first == b);
                        CHECK(back.second == c);
                        for (int i = 0; i <= n; ++i) {
                            const auto x = apply_op(n, CrystalOp::F, i, {b, c});
                            const auto y = apply_op(n, CrystalOp::F, i, {c2, b2});
                            REQUIRE(x.has_value() == y.has_value());
                            if (x) {
                                const auto [cc, bb] = combinatorial_R(n, (*x)[0], (*x)[1]);
                                CHECK(TensorElement{cc, bb} == *y);
                            }
                        }
                        if (r == s) CHECK((c2 == b && b2 == c));
                    }
}

TEST_CASE("energy orientation is pinned by calibration") {
    CHECK(calibrate_energy_orientation() == kEnergyOrientation);
    // the other sign breaks the axioms on B_loc(2w) of A1
    CHECK_FALSE(check_crystal_graph(build_crystal_graph(1, {1, 1}, -kEnergyOrientation)).ok);
}

TEST_CASE("one-dimensional sums of A1 are differences of q-binomials") {
    for (int N = 1; N <= 8; ++N)
        for (int j = 0; 2 * j <= N; ++j) {
            CAPTURE(N);
            CAPTURE(j);
            CHECK(X_poly(1, {N}, {N - 2 * j}) == q_binomial(N, j) - q_binomial(N, j - 1));
        }
    CHECK(X_poly(1, {6}, {0}) == q(3) + q(5) + q(6) + q(7) + q(9));
}

TEST_CASE("one-dimensional sums of single boxes are major index generating functions") {
    // shape lambda (a partition with at most n+1 rows) <-> weight (l1-l2, l2-l3, ...)
    for (int n = 1; n <= 2; ++n)
        for (int N = 1; N <= 6; ++N) {
            Weight mu(n, 0);
            mu[0] = N;
            for (const auto& p : restricted_paths(n, mu, std::nullopt)) {
                std::vector<int> shape(n + 1, 0);
                // recover the partition from the weight
                for (int i = n - 1; i >= 0; --i) shape[i] = shape[i + 1] + p.wt[i];
                const int size = std::accumulate(shape.begin(), shape.end(), 0);
                const int shift = (N - size) / (n + 1);
                for (int& x : shape) x += shift;
                std::erase(shape, 0);
                CAPTURE(n);
                CAPTURE(N);
                CAPTURE(weight_to_string(p.wt));
                CHECK(X_poly(n, mu, p.wt) == maj_generating(shape));
            }
        }
}

TEST_CASE("crystal axioms on small B_loc") {
    for (const auto& h : std::vector<std::vector<int>>{{1}, {1, 1, 1}, {1, 2}, {2, 2}, {1, 1, 2}})
        for (int n = 2; n <= 3; ++n) {
            const auto g = build_crystal_graph(n, h);
            const auto rep = check_crystal_graph(g);
            CAPTURE(n);
            CHECK(rep.ok);
        }
}

TEST_CASE("cache round trip and corruption") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "weylcurrents_cache_test";
    fs::remove_all(dir);
    const auto g = load_or_build(2, {1, 2}, dir.string());
    const auto path = dir / cache_file_name(2, {1, 2});
    REQUIRE(fs::exists(path));
    const auto h = load_or_build(2, {1, 2}, dir.string());
    CHECK(h.vertices == g.vertices);
    CHECK(h.f_arrow == g.f_arrow);
    CHECK(h.energy == g.energy);
    CHECK(to_dot(h) == to_dot(g));
    {
        std::ofstream out(path, std::ios::trunc);
        out << "{\"header\": {\"format_version\": 1";
    }
    CHECK_THROWS_AS(load_or_build(2, {1, 2}, dir.string()), CrystalError);
    {
        std::ofstream out(path, std::ios::trunc);
        out << R"({"header":{"format_version":1,"n":2,"heights":[1,2],"energy_orientation":1},"vertices":[],"arrows":[[0,0,5]],"energy":[]})";
    }
    CHECK_THROWS_AS(load_or_build(2, {1, 2}, dir.string()), CrystalError);
    fs::remove_all(dir);
}

TEST_CASE("DOT output is deterministic") {
    CHECK(to_dot(build_crystal_graph(2, {1, 1})) == to_dot(build_crystal_graph(2, {1, 1})));
}

TEST_CASE("tensor rule on two boxes of A1") {
    const auto one = ColumnElement::from_letters({1});
    const auto two = ColumnElement::from_letters({2});
    auto s = tensor_stats(1, {one, one});
    CHECK(s.eps[0] == 2);
    CHECK(s.eps[1] == 0);
    s = tensor_stats(1, {one, two});
    CHECK(s.eps[0] == 1);
    CHECK(s.eps[1] == 0);
    CHECK(apply_op(1, CrystalOp::F, 1, {one}) == std::optional<TensorElement>(TensorElement{two}));
    CHECK_FALSE(apply_op(1, CrystalOp::F, 1, {two}).has_value());
    CHECK(apply_op(1, CrystalOp::E, 0, {one, one}) == std::optional<TensorElement>(TensorElement{one, two}));
    CHECK(apply_op(1, CrystalOp::F, 1, {one, one}) == std::optional<TensorElement>(TensorElement{two, one}));
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= n; ++r) {
            const auto u = highest_element({r});
            const auto st = tensor_stats(n, u);
            for (int i = 1; i <= n; ++i) CHECK(st.eps[i] == 0);
        }
}

TEST_CASE("classical components") {
    const auto a1 = build_crystal_graph(1, {1, 1});
    const auto c1 = classical_components(a1);
    REQUIRE(c1.highest.size() == 2);
    std::vector<Weight> w1;
    for (int h : c1.highest) w1.push_back(a1.wt[h]);
    std::sort(w1.begin(), w1.end());
    CHECK(w1 == std::vector<Weight>{{0}, {2}});
    const auto a2 = build_crystal_graph(2, {1, 1});
    const auto c2 = classical_components(a2);
    std::vector<Weight> w2;
    for (int h : c2.highest) w2.push_back(a2.wt[h]);
    std::sort(w2.begin(), w2.end());
    CHECK(w2 == std::vector<Weight>{{0, 1}, {2, 0}});
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= n; ++r) CHECK(classical_components(build_crystal_graph(n, {r})).highest.size() == 1);
}

TEST_CASE("local energy and restricted paths of A1") {
    const auto one = ColumnElement::from_letters({1});
    const auto two = ColumnElement::from_letters({2});
    CHECK(local_energy(1, one, one) == 0);
    CHECK(local_energy(1, one, two) == -1);
    CHECK(local_energy(1, two, two) == 0);
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s)
                CHECK(local_energy(n, highest_element({r})[0], highest_element({s})[0]) == 0);
    const auto p1 = restricted_paths(1, {2}, 1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].element == TensorElement{one, two});
    CHECK(p1[0].wt == Weight{0});
    CHECK(p1[0].D == -1);
    const auto pinf = restricted_paths(1, {2}, std::nullopt);
    REQUIRE(pinf.size() == 2);
    for (const Weight& mu : {Weight{1, 1}, Weight{2, 0}, Weight{0, 3}}) {
        const auto paths = restricted_paths(2, mu, std::nullopt);
        CHECK(std::any_of(paths.begin(), paths.end(), [&](const RestrictedPath& p) {
            return p.element == highest_element(heights_of(mu)) && p.D == 0;
        }));
    }
}
