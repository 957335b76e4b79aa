#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylcurrents {

using Rational = boost::rational<std::int64_t>;

// Coordinates over the fundamental weights.
using Weight = std::vector<int>;

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : w) h = (h ^ static_cast<std::size_t>(x + 0x5bd1)) * 0x100000001b3ULL;
        return h;
    }
};

struct RootSystemError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Family { A, D, E };

struct RootSystemData {
    Family family = Family::A;
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<Rational>> inverse_cartan;
    std::vector<Weight> positive_roots;         // fundamental coordinates
    std::vector<Weight> positive_roots_simple;  // simple-root coordinates
    Weight highest_root;
    Weight rho;
    int dual_coxeter = 0;
    // (omega_i, rho) scaled by the common denominator of the inverse Cartan matrix.
    std::vector<std::int64_t> height_coeff;
    std::int64_t inverse_denominator = 1;

    std::string name() const;
    Weight zero() const { return Weight(rank, 0); }
    Weight simple_root(int i) const;  // 1-based index
};

RootSystemData build_root_system(Family family, int rank);
// Parses names like "A2", "D4", "E6".
RootSystemData build_root_system(const std::string& type);

Weight reflect(const RootSystemData& rs, int i, const Weight& lambda);
Rational inner(const RootSystemData& rs, const Weight& lambda, const Weight& mu);
bool dominance_leq(const RootSystemData& rs, const Weight& lambda, const Weight& mu);

bool is_dominant(const Weight& lambda);
// Expresses lambda over the simple roots; false when lambda is outside Q.
bool to_root_coords(const RootSystemData& rs, const Weight& lambda, std::vector<int>& out);
Weight from_root_coords(const RootSystemData& rs, const std::vector<int>& c);
bool in_root_lattice(const RootSystemData& rs, const Weight& lambda);

// (lambda, rho), times a fixed denominator so the result is an integer ordering key.
std::int64_t height_key(const RootSystemData& rs, const Weight& lambda);

struct DominantResult {
    Weight weight;
    int reflections = 0;
};
// Plain W-action; reflects lambda into the dominant chamber.
DominantResult dominant_rep(const RootSystemData& rs, const Weight& lambda);

// rho-shifted: w(lambda+rho)-rho dominant. Returns false when lambda+rho is on a wall.
bool dot_dominant(const RootSystemData& rs, const Weight& lambda, Weight& out, int& sign);

std::vector<Weight> weyl_orbit(const RootSystemData& rs, const Weight& dominant);

using WeightMultiplicities = std::map<Weight, std::int64_t>;

WeightMultiplicities freudenthal_weights(const RootSystemData& rs, const Weight& lambda);
// Multiplicities on dominant weights only.
WeightMultiplicities freudenthal_dominant(const RootSystemData& rs, const Weight& lambda);
// Product formula over positive roots; exact.
std::int64_t weyl_dimension(const RootSystemData& rs, const Weight& lambda);

// All w in W as integer matrices acting on fundamental coordinates. Only for small W.
std::vector<std::vector<std::vector<int>>> weyl_group_elements(const RootSystemData& rs,
                                                                std::size_t limit = 100000);

std::string weight_to_string(const Weight& w);

}  // namespace weylcurrents
