#pragma once

#include "weylcurrents/affine_weyl.hpp"
#include "weylcurrents/qpoly.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace weylcurrents {

struct CharacterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weight -> polynomial in q, where q stands for e^{-delta}. Exponents live in [0, cutoff].
struct GradedCharacter {
    int cutoff = 0;
    std::map<Weight, QPolynomial> terms;
    std::optional<int> level_tag;

    void add(const Weight& w, const QPolynomial& p);
    QPolynomial at(const Weight& w) const;
    GradedCharacter truncated(int n) const;
    bool nonnegative() const;
    friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) { return a.terms == b.terms; }
};

// Dominant weight -> graded multiplicity of V(weight).
struct IrrepExpansion {
    int cutoff = 0;
    std::map<Weight, QPolynomial> terms;

    void add(const Weight& w, const QPolynomial& p);
    QPolynomial at(const Weight& w) const;
    IrrepExpansion truncated(int n) const;
    friend bool operator==(const IrrepExpansion& a, const IrrepExpansion& b) { return a.terms == b.terms; }
};

// Affine character at a fixed level; the polynomial variable at each classical weight records the
// delta-coefficient (exponent m stands for e^{m delta}).
struct AffineCharacter {
    int level = 0;
    std::map<Weight, QPolynomial> terms;

    static AffineCharacter single(const AffineWeight& w);
    void add(const Weight& w, const QPolynomial& p);
    friend bool operator==(const AffineCharacter& a, const AffineCharacter& b) {
        return a.level == b.level && a.terms == b.terms;
    }
};

GradedCharacter char_irreducible(const RootSystemData& rs, const Weight& lambda);

// Literal product over weights: ch V(lambda) * prod_{n<=N} (1-q^n)^{-rank} prod_alpha (1-q^n e^alpha)^{-1}.
GradedCharacter char_parabolic_verma(const RootSystemData& rs, const Weight& lambda, int N);
// Same module, decomposed into irreducibles without passing through weights.
IrrepExpansion parabolic_verma_irreps(const RootSystemData& rs, const Weight& lambda, int N);

GradedCharacter char_integrable(const RootSystemData& rs, const Weight& lambda, int k, int N);
IrrepExpansion integrable_irreps(const RootSystemData& rs, const Weight& lambda, int k, int N);

AffineCharacter demazure_step(const RootSystemData& rs, int i, const AffineCharacter& c);

// Level one Demazure realisation; head V(lambda) at degree 0.
GradedCharacter char_local_weyl(const RootSystemData& rs, const Weight& lambda, int N);
IrrepExpansion local_weyl_irreps(const RootSystemData& rs, const Weight& lambda);
int local_weyl_top_degree(const RootSystemData& rs, const Weight& lambda);
// Word i_1..i_l with target = s_{i_1}...s_{i_l}(varpi + Lambda_0); also reports varpi.
std::vector<int> local_weyl_word(const RootSystemData& rs, const Weight& lambda, Weight* varpi = nullptr);
void clear_local_weyl_cache();

GradedCharacter char_global_weyl(const RootSystemData& rs, const Weight& lambda, int N);

struct GlobalWeylExpansion {
    int cutoff = 0;
    std::map<Weight, QPolynomial> multiplicities;  // nonzero entries only, truncated at cutoff
    std::map<Weight, int> top_degree;              // top q-degree of W(mu,0) for reported mu
    bool remainder_zero = false;

    bool trusted(const Weight& mu) const {
        auto it = top_degree.find(mu);
        return it != top_degree.end() && it->second <= cutoff;
    }
};

GlobalWeylExpansion expand_in_global_weyl(const RootSystemData& rs, const GradedCharacter& c, int N);
GlobalWeylExpansion expand_in_global_weyl(const RootSystemData& rs, const IrrepExpansion& c, int N);

// W-invariant character -> irreducible decomposition; throws CharacterError when not W-invariant.
IrrepExpansion to_irreps(const RootSystemData& rs, const GradedCharacter& c);
GradedCharacter materialize(const RootSystemData& rs, const IrrepExpansion& e);

// V(mu) * chi for a W-invariant chi given by its weight multiplicities.
IrrepExpansion tensor_with(const RootSystemData& rs, const IrrepExpansion& e,
                           const std::map<Weight, BigInt>& chi);

}  // namespace weylcurrents
