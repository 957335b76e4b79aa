#pragma once

#include "weylcurrents/root_system.hpp"

#include <optional>
#include <vector>

namespace weylcurrents {

// lambda + level*Lambda_0 + degree*delta
struct AffineWeight {
    Weight classical;
    int level = 0;
    int degree = 0;
    friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
    friend auto operator<=>(const AffineWeight&, const AffineWeight&) = default;
};

AffineWeight affine_simple_root(const RootSystemData& rs, int i);  // i in 0..rank
int affine_pairing(const RootSystemData& rs, int i, const AffineWeight& lam);
AffineWeight affine_reflect(const RootSystemData& rs, int i, const AffineWeight& lam);
// (lambda,lambda') + k m' + k' m
Rational affine_inner(const RootSystemData& rs, const AffineWeight& a, const AffineWeight& b);
// <theta^vee, lambda>
int theta_pairing(const RootSystemData& rs, const Weight& lambda);
bool in_level(const RootSystemData& rs, const Weight& lambda, int k);  // lambda in P_+^k

using IntMatrix = std::vector<std::vector<int>>;

// The element w * t_gamma, with gamma in Q stored in fundamental coordinates.
struct AffineWeylElement {
    IntMatrix finite;       // action of w on fundamental coordinates
    IntMatrix finite_inv;
    Weight translation;
    friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
        return a.finite == b.finite && a.translation == b.translation;
    }
    friend auto operator<=>(const AffineWeylElement& a, const AffineWeylElement& b) {
        if (auto c = a.finite <=> b.finite; c != 0) return c;
        return a.translation <=> b.translation;
    }
};

AffineWeylElement affine_identity(const RootSystemData& rs);
AffineWeylElement affine_simple_reflection(const RootSystemData& rs, int i);  // i in 0..rank
AffineWeylElement translation_element(const RootSystemData& rs, const Weight& gamma);
AffineWeylElement finite_element(const RootSystemData& rs, const std::vector<int>& word);
AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b);
AffineWeylElement inverse(const AffineWeylElement& g);
AffineWeylElement from_word(const RootSystemData& rs, const std::vector<int>& word);

Weight apply_finite(const IntMatrix& m, const Weight& w);
int finite_sign(const IntMatrix& m);

AffineWeight act_affine(const RootSystemData& rs, const AffineWeylElement& g, const AffineWeight& lam);
// g(Lambda + rho_k) - rho_k with rho_k = rho + (k + h)Lambda_0; the level of Lambda is carried through.
AffineWeight dot_k(const RootSystemData& rs, const AffineWeylElement& g, const AffineWeight& lam, int k);

struct RhoShift {
    int k = 0;
    AffineWeight value;
};
RhoShift rho_shift(const RootSystemData& rs, int k);

int length(const RootSystemData& rs, const AffineWeylElement& g);
std::vector<int> reduced_word(const RootSystemData& rs, const AffineWeylElement& g);

struct CosetTerm {
    AffineWeylElement element;  // minimal length representative
    AffineWeight image;         // element o_k lambda, dominant classical part
    int offset = 0;             // <d, lambda - image>
    int sign = 1;               // (-1)^length
};

// Cosets W\W_af with offset <= N, ordered by offset.
std::vector<CosetTerm> cosets_up_to_shift(const RootSystemData& rs, const Weight& lambda, int k, int N);

struct DotRep {
    AffineWeylElement element;
    Weight dominant;
    int sign = 1;
    int delta_shift = 0;  // element o_k (lambda + k Lambda_0) = dominant + k Lambda_0 + delta_shift delta
};
// std::nullopt means lambda + rho_k lies on a wall.
std::optional<DotRep> dominant_dot_rep(const RootSystemData& rs, const Weight& lambda, int k);

// Lattice points gamma in Q with |gamma| <= radius.
std::vector<Weight> root_lattice_ball(const RootSystemData& rs, double radius);

}  // namespace weylcurrents
