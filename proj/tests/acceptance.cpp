// One line per acceptance criterion. Parameters are pinned here; all comparisons are exact.
#include "weylcurrents/verify.hpp"

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace weylcurrents;

namespace {

struct Criterion {
    int id;
    const char* title;
    std::vector<std::function<SuiteReport(const VerifyOptions&)>> suites;
    VerifyOptions opt;
};

VerifyOptions with_N(int N) {
    VerifyOptions o;
    o.N = N;
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "cross-route equality, A1 <a1,mu> <= 6, k <= 3; A2 m1+m2 <= 3, k <= 2; N = 12", {verify_cross_route}, with_N(12)},
        {2, "desk values X^(1)_{2w,0} = q, X_{2w,0} = q, X_{2w,2w} = 1, P^(k)_{0,0} = 1", {verify_desk_values}, with_N(12)},
        {3, "level-one multiplicities q^{((l,l)-(w,w))/2}, A1-A3 and D4, N = 10", {verify_level_one}, with_N(10)},
        {4, "Frenkel-Kac character, A1-A3, N = 10", {verify_frenkel_kac}, with_N(10)},
        {5, "energy axioms on every B_loc(mu) of the criterion 1 grid", {verify_energy_axioms}, VerifyOptions{}},
        {6, "Demazure character of W(mu,0) equals the crystal character, N = 8", {verify_demazure_vs_crystal}, with_N(8)},
        {7, "Demazure limit equals the Weyl-Kac character, A1, k = 1, N = 6", {verify_demazure_limit}, with_N(6)},
        {8, "vertex identity on the criterion 1 grid, N = 8", {verify_vertex_identity}, with_N(8)},
        {9, "length vs Cayley graph, Yang-Baxter, dim W(l,0) multiplicativity, positivity", {verify_structural}, with_N(12)},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        bool ok = true;
        long checks = 0;
        double seconds = 0;
        std::vector<std::string> failures;
        for (const auto& suite : c.suites) {
            SuiteReport r;
            try {
                r = suite(c.opt);
            } catch (const std::exception& e) {
                r.failures.push_back(e.what());
            }
            ok = ok && r.ok();
            checks += r.checks;
            seconds += r.seconds;
            failures.insert(failures.end(), r.failures.begin(), r.failures.end());
        }
        std::printf("%s criterion %d: %s [%ld checks, %.2fs]\n", ok ? "PASS" : "FAIL", c.id, c.title, checks, seconds);
        for (std::size_t i = 0; i < failures.size() && i < 10; ++i) std::printf("    %s\n", failures[i].c_str());
        if (!ok) ++failed;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
