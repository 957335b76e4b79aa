#include "weylcurrents/crystal.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

namespace weylcurrents {

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::tuple<int, int, int>, std::map<Pair, Pair>>& r_tables() {
    static std::map<std::tuple<int, int, int>, std::map<Pair, Pair>> t;
    return t;
}

std::map<std::tuple<int, int, int, int>, std::map<Pair, int>>& h_tables() {
    static std::map<std::tuple<int, int, int, int>, std::map<Pair, int>> t;
    return t;
}

TensorElement two(std::uint32_t a, std::uint32_t b) { return {ColumnElement{a}, ColumnElement{b}}; }

std::map<Pair, Pair> build_r_table(int n, int r, int s) {
    auto hw_by_weight = [n](int a, int b) {
        std::map<Weight, TensorElement> m;
        for (auto& x : all_elements(n, {a, b}))
            if (classical_highest(n, x)) {
                if (!m.emplace(tensor_weight(n, x), x).second)
                    throw CrystalError("combinatorial R: decomposition is not multiplicity free");
            }
        return m;
    };
    const auto src = hw_by_weight(r, s);
    const auto dst = hw_by_weight(s, r);
    if (src.size() != dst.size()) throw CrystalError("combinatorial R: highest weights do not match");

    std::map<Pair, Pair> table;
    for (const auto& [w, x] : src) {
        auto it = dst.find(w);
        if (it == dst.end()) throw CrystalError("combinatorial R: weight matching failed");
        table[{x[0].bits, x[1].bits}] = {it->second[0].bits, it->second[1].bits};
        std::deque<std::pair<TensorElement, TensorElement>> queue{{x, it->second}};
        while (!queue.empty()) {
            auto [a, b] = queue.front();
            queue.pop_front();
            for (int i = 1; i <= n; ++i) {
                auto fa = apply_op(n, CrystalOp::F, i, a);
                if (!fa) continue;
                auto fb = apply_op(n, CrystalOp::F, i, b);
                if (!fb) throw CrystalError("combinatorial R: arrow mismatch while propagating");
                Pair key{(*fa)[0].bits, (*fa)[1].bits};
                if (table.count(key)) continue;
                table[key] = {(*fb)[0].bits, (*fb)[1].bits};
                queue.emplace_back(*fa, *fb);
            }
        }
    }
    if (table.size() != columns(n, r).size() * columns(n, s).size())
        throw CrystalError("combinatorial R: propagation did not reach every element");
    return table;
}

const std::map<Pair, Pair>& r_table(int n, int r, int s) {
    const auto key = std::make_tuple(n, r, s);
    {
        std::lock_guard<std::mutex> lock(table_mutex());
        auto it = r_tables().find(key);
        if (it != r_tables().end()) return it->second;
    }
    auto t = build_r_table(n, r, s);
    std::lock_guard<std::mutex> lock(table_mutex());
    return r_tables().emplace(key, std::move(t)).first->second;
}

TensorElement apply_r(int n, const TensorElement& x) {
    const auto& t = r_table(n, x[0].height(), x[1].height());
    const auto& y = t.at({x[0].bits, x[1].bits});
    return two(y.first, y.second);
}

// Change of H across x -> e_0 x.
int e0_delta(int n, const TensorElement& x, int orientation) {
    auto a = apply_op_at(n, CrystalOp::E, 0, x);
    auto b = apply_op_at(n, CrystalOp::E, 0, apply_r(n, x));
    if (!a || !b) throw CrystalError("local energy: e_0 does not commute with R");
    if (a->position == 0 && b->position == 0) return orientation;
    if (a->position == 1 && b->position == 1) return -orientation;
    return 0;
}

std::map<Pair, int> build_h_table(int n, int r, int s, int orientation) {
    const TensorElement u{ColumnElement::highest(r), ColumnElement::highest(s)};
    std::map<Pair, int> h{{{u[0].bits, u[1].bits}, 0}};
    std::deque<TensorElement> queue{u};
    while (!queue.empty()) {
        const TensorElement x = queue.front();
        queue.pop_front();
        const int hx = h.at({x[0].bits, x[1].bits});
        for (int i = 0; i <= n; ++i)
            for (CrystalOp op : {CrystalOp::E, CrystalOp::F}) {
                auto y = apply_op(n, op, i, x);
                if (!y) continue;
                int hy = hx;
                if (i == 0) hy += op == CrystalOp::E ? e0_delta(n, x, orientation) : -e0_delta(n, *y, orientation);
                Pair key{(*y)[0].bits, (*y)[1].bits};
                auto it = h.find(key);
                if (it != h.end()) {
                    if (it->second != hy) throw CrystalError("local energy: inconsistent propagation");
                    continue;
                }
                h.emplace(key, hy);
                queue.push_back(*y);
            }
    }
    if (h.size() != columns(n, r).size() * columns(n, s).size())
        throw CrystalError("local energy: tensor product is not connected");
    return h;
}

const std::map<Pair, int>& h_table(int n, int r, int s, int orientation) {
    const auto key = std::make_tuple(n, r, s, orientation);
    {
        std::lock_guard<std::mutex> lock(table_mutex());
        auto it = h_tables().find(key);
        if (it != h_tables().end()) return it->second;
    }
    auto t = build_h_table(n, r, s, orientation);
    std::lock_guard<std::mutex> lock(table_mutex());
    return h_tables().emplace(key, std::move(t)).first->second;
}

int theta_pair_a(const Weight& w) {
    int s = 0;
    for (int x : w) s += x;
    return s;
}

}  // namespace

ColumnElement ColumnElement::from_letters(const std::vector<int>& letters) {
    ColumnElement c;
    for (int j : letters) {
        if (j < 1 || j > 32) throw CrystalError("column letter out of range");
        if (c.contains(j)) throw CrystalError("column letters must be distinct");
        c.bits |= 1u << (j - 1);
    }
    return c;
}

ColumnElement ColumnElement::highest(int r) { return ColumnElement{r >= 32 ? ~0u : (1u << r) - 1u}; }

std::vector<int> ColumnElement::letters() const {
    std::vector<int> out;
    for (int j = 1; j <= 32; ++j)
        if (contains(j)) out.push_back(j);
    return out;
}

int ColumnElement::height() const { return std::popcount(bits); }

std::vector<ColumnElement> columns(int n, int r) {
    std::vector<ColumnElement> out;
    for (std::uint32_t m = 0; m < (1u << (n + 1)); ++m)
        if (std::popcount(m) == r) out.push_back(ColumnElement{m});
    std::sort(out.begin(), out.end());
    return out;
}

Weight column_weight(int n, const ColumnElement& c) {
    Weight w(n, 0);
    for (int i = 1; i <= n; ++i) w[i - 1] = int(c.contains(i)) - int(c.contains(i + 1));
    return w;
}

std::optional<ColumnElement> column_apply(int n, CrystalOp op, int i, const ColumnElement& c) {
    int from, to;
    if (i == 0) {
        from = op == CrystalOp::F ? n + 1 : 1;
        to = op == CrystalOp::F ? 1 : n + 1;
    } else {
        from = op == CrystalOp::F ? i : i + 1;
        to = op == CrystalOp::F ? i + 1 : i;
    }
    if (!c.contains(from) || c.contains(to)) return std::nullopt;
    return ColumnElement{(c.bits & ~(1u << (from - 1))) | (1u << (to - 1))};
}

std::optional<Acted> apply_op_at(int n, CrystalOp op, int i, const TensorElement& b) {
    // Signature: each factor contributes -^eps +^phi; adjacent "+-" pairs cancel.
    struct Sym {
        bool plus;
        std::size_t pos;
    };
    std::vector<Sym> stack;
    for (std::size_t p = 0; p < b.size(); ++p) {
        if (column_apply(n, CrystalOp::E, i, b[p])) {
            if (!stack.empty() && stack.back().plus) stack.pop_back();
            else stack.push_back({false, p});
        }
        if (column_apply(n, CrystalOp::F, i, b[p])) stack.push_back({true, p});
    }
    std::optional<std::size_t> target;
    if (op == CrystalOp::E) {
        for (const auto& s : stack)
            if (!s.plus) target = s.pos;
    } else {
        for (const auto& s : stack)
            if (s.plus) {
                target = s.pos;
                break;
            }
    }
    if (!target) return std::nullopt;
    Acted a{b, *target};
    a.element[*target] = *column_apply(n, op, i, b[*target]);
    return a;
}

std::optional<TensorElement> apply_op(int n, CrystalOp op, int i, const TensorElement& b) {
    auto a = apply_op_at(n, op, i, b);
    if (!a) return std::nullopt;
    return std::move(a->element);
}

TensorStats tensor_stats(int n, const TensorElement& b) {
    TensorStats s;
    s.wt = tensor_weight(n, b);
    s.eps.assign(n + 1, 0);
    s.phi.assign(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        int e = 0, f = 0;
        for (const auto& c : b) {
            const int e2 = column_apply(n, CrystalOp::E, i, c) ? 1 : 0;
            const int f2 = column_apply(n, CrystalOp::F, i, c) ? 1 : 0;
            const int ne = e + std::max(0, e2 - f);
            const int nf = f2 + std::max(0, f - e2);
            e = ne;
            f = nf;
        }
        s.eps[i] = e;
        s.phi[i] = f;
    }
    return s;
}

Weight tensor_weight(int n, const TensorElement& b) {
    Weight w(n, 0);
    for (const auto& c : b) {
        auto cw = column_weight(n, c);
        for (int i = 0; i < n; ++i) w[i] += cw[i];
    }
    return w;
}

bool classical_highest(int n, const TensorElement& b) {
    for (int i = 1; i <= n; ++i)
        if (apply_op_at(n, CrystalOp::E, i, b)) return false;
    return true;
}

std::vector<int> heights_of(const Weight& mu) {
    std::vector<int> h;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 0) throw CrystalError("B_loc needs a dominant weight");
        for (int t = 0; t < mu[i]; ++t) h.push_back(static_cast<int>(i) + 1);
    }
    return h;
}

TensorElement highest_element(const std::vector<int>& heights) {
    TensorElement b;
    for (int r : heights) b.push_back(ColumnElement::highest(r));
    return b;
}

std::vector<TensorElement> all_elements(int n, const std::vector<int>& heights) {
    std::vector<TensorElement> out{TensorElement{}};
    for (int r : heights) {
        if (r < 1 || r > n) throw CrystalError("column height out of range");
        const auto cols = columns(n, r);
        std::vector<TensorElement> next;
        next.reserve(out.size() * cols.size());
        for (const auto& b : out)
            for (const auto& c : cols) {
                next.push_back(b);
                next.back().push_back(c);
            }
        out = std::move(next);
    }
    return out;
}

std::pair<ColumnElement, ColumnElement> combinatorial_R(int n, const ColumnElement& b, const ColumnElement& c) {
    auto y = apply_r(n, {b, c});
    return {y[0], y[1]};
}

int local_energy(int n, const ColumnElement& b, const ColumnElement& c, int orientation) {
    return h_table(n, b.height(), c.height(), orientation).at({b.bits, c.bits});
}

int energy_D(int n, const TensorElement& b, int orientation) {
    int total = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            ColumnElement moving = b[j];
            for (std::size_t p = j - 1; p > i; --p) {
                auto [l, r] = combinatorial_R(n, b[p], moving);
                moving = l;
                (void)r;
            }
            total += local_energy(n, b[i], moving, orientation);
        }
    return total;
}

int CrystalGraph::index_of(const TensorElement& b) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), b);
    if (it == vertices.end() || *it != b) return -1;
    return static_cast<int>(it - vertices.begin());
}

CrystalGraph build_crystal_graph(int n, const std::vector<int>& heights, int orientation) {
    CrystalGraph g;
    g.n = n;
    g.heights = heights;
    g.orientation = orientation;
    g.vertices = all_elements(n, heights);
    std::sort(g.vertices.begin(), g.vertices.end());
    const int V = static_cast<int>(g.vertices.size());
    g.f_arrow.assign(n + 1, std::vector<int>(V, -1));
    g.e_arrow.assign(n + 1, std::vector<int>(V, -1));
    for (int v = 0; v < V; ++v) {
        auto st = tensor_stats(n, g.vertices[v]);
        g.wt.push_back(st.wt);
        g.eps.push_back(st.eps);
        g.phi.push_back(st.phi);
        for (int i = 0; i <= n; ++i) {
            if (auto y = apply_op(n, CrystalOp::F, i, g.vertices[v])) g.f_arrow[i][v] = g.index_of(*y);
            if (auto y = apply_op(n, CrystalOp::E, i, g.vertices[v])) g.e_arrow[i][v] = g.index_of(*y);
        }
        g.energy.push_back(energy_D(n, g.vertices[v], orientation));
    }
    g.component = classical_components(g).id;
    return g;
}

Components classical_components(const CrystalGraph& g) {
    const int V = static_cast<int>(g.vertices.size());
    Components c;
    c.id.assign(V, -1);
    int next = 0;
    for (int s = 0; s < V; ++s) {
        if (c.id[s] != -1) continue;
        std::vector<int> stack{s};
        c.id[s] = next;
        std::vector<int> tops;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            bool top = true;
            for (int i = 1; i <= g.n; ++i) {
                for (int w : {g.f_arrow[i][v], g.e_arrow[i][v]})
                    if (w >= 0 && c.id[w] == -1) {
                        c.id[w] = next;
                        stack.push_back(w);
                    }
                if (g.e_arrow[i][v] >= 0) top = false;
            }
            if (top) tops.push_back(v);
        }
        if (tops.size() != 1) throw CrystalError("classical component without a unique highest element");
        c.highest.push_back(tops.front());
        ++next;
    }
    return c;
}

AxiomReport check_crystal_graph(const CrystalGraph& g) {
    AxiomReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        if (rep.failures.size() < 50) rep.failures.push_back(s);
    };
    const int V = static_cast<int>(g.vertices.size());
    const int n = g.n;
    const int b0 = g.index_of(highest_element(g.heights));
    if (b0 < 0) fail("highest element missing");
    else if (g.energy[b0] != 0) fail("D(b_0) != 0");

    for (int v = 0; v < V; ++v) {
        const auto name = element_to_string(g.vertices[v]);
        auto st = tensor_stats(n, g.vertices[v]);
        if (st.wt != g.wt[v] || st.eps != g.eps[v] || st.phi != g.phi[v]) fail("stored statistics differ at " + name);
        for (int i = 0; i <= n; ++i) {
            const int pairing = i == 0 ? -theta_pair_a(g.wt[v]) : g.wt[v][i - 1];
            if (pairing != g.phi[v][i] - g.eps[v][i]) fail("wt/eps/phi mismatch at " + name);
            auto fy = apply_op(n, CrystalOp::F, i, g.vertices[v]);
            const int f = g.f_arrow[i][v];
            if ((f >= 0) != fy.has_value() || (f >= 0 && g.vertices[f] != *fy)) fail("stored f-arrow wrong at " + name);
            if (f >= 0 && g.e_arrow[i][f] != v) fail("e/f not adjoint at " + name);
            int len = 0;
            for (int w = v; g.e_arrow[i][w] >= 0; w = g.e_arrow[i][w]) ++len;
            if (len != g.eps[v][i]) fail("eps is not the string length at " + name);
            const int e = g.e_arrow[i][v];
            if (e < 0) continue;
            if (i > 0 && g.energy[e] != g.energy[v]) fail("D not constant along e_" + std::to_string(i) + " at " + name);
            if (i == 0 && g.eps[v][0] >= 2 && g.energy[e] != g.energy[v] - 1)
                fail("D(e_0 b) != D(b) - 1 at " + name);
        }
    }
    try {
        classical_components(g);
    } catch (const CrystalError& e) {
        fail(e.what());
    }
    return rep;
}

int calibrate_energy_orientation() {
    const std::vector<std::pair<int, std::vector<int>>> grid{
        {1, {1, 1}}, {1, {1, 1, 1}}, {2, {1, 1}}, {2, {1, 2}}, {2, {1, 1, 2}}, {3, {1, 2, 3}}};
    std::vector<int> passing;
    for (int o : {1, -1}) {
        bool ok = true;
        for (const auto& [n, h] : grid) {
            try {
                if (!check_crystal_graph(build_crystal_graph(n, h, o)).ok) ok = false;
            } catch (const CrystalError&) {
                ok = false;
            }
            if (!ok) break;
        }
        if (ok) passing.push_back(o);
    }
    if (passing.size() != 1) throw CrystalError("energy orientation is not uniquely determined");
    return passing.front();
}

std::vector<RestrictedPath> restricted_paths(int n, const Weight& mu, std::optional<int> k,
                                             const CrystalGraph* graph) {
    const auto heights = heights_of(mu);
    std::vector<RestrictedPath> out;
    if (graph) {
        if (graph->n != n || graph->heights != heights) throw CrystalError("graph does not match B_loc(mu)");
        for (std::size_t v = 0; v < graph->vertices.size(); ++v) {
            bool top = true;
            for (int i = 1; i <= n; ++i) top = top && graph->eps[v][i] == 0;
            if (!top || (k && graph->eps[v][0] > *k)) continue;
            out.push_back({graph->vertices[v], graph->wt[v], graph->energy[v], graph->eps[v][0]});
        }
        return out;
    }
    for (auto& b : all_elements(n, heights)) {
        if (!classical_highest(n, b)) continue;
        auto st = tensor_stats(n, b);
        if (k && st.eps[0] > *k) continue;
        const int d = energy_D(n, b);
        out.push_back({std::move(b), st.wt, d, st.eps[0]});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.element < b.element; });
    return out;
}

std::string element_to_string(const TensorElement& b) {
    std::ostringstream os;
    for (std::size_t p = 0; p < b.size(); ++p) {
        if (p) os << "⊗";
        os << '{';
        auto l = b[p].letters();
        for (std::size_t t = 0; t < l.size(); ++t) os << (t ? "," : "") << l[t];
        os << '}';
    }
    if (b.empty()) os << "∅";
    return os.str();
}

std::string to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph B_loc {\n";
    os << "  // A" << g.n << " heights";
    for (int h : g.heights) os << ' ' << h;
    os << "\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        os << "  v" << v << " [label=\"" << element_to_string(g.vertices[v]) << "\\nwt=" << weight_to_string(g.wt[v])
           << ", D=" << g.energy[v] << "\"];\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (int i = 0; i <= g.n; ++i)
            if (g.f_arrow[i][v] >= 0) os << "  v" << v << " -> v" << g.f_arrow[i][v] << " [label=\"" << i << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace weylcurrents
