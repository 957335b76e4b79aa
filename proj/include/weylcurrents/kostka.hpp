#pragma once

#include "weylcurrents/crystal.hpp"
#include "weylcurrents/gchar.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace weylcurrents {

enum class Route { Paths, AltSum, Characters };
std::string route_name(Route r);

struct KostkaResult {
    Weight mu;
    Weight lambda;
    std::optional<int> k;  // nullopt: unrestricted
    QPolynomial value;
    Route route = Route::Paths;
};

// Raised when the requested cutoff cannot certify a multiplicity.
struct TruncationError : std::runtime_error {
    int required_cutoff;
    TruncationError(const std::string& what, int required)
        : std::runtime_error(what), required_cutoff(required) {}
};

// lambda -> sum of q^{-D(b)} over classical highest b of weight lambda (and eps_0(b) <= k when given).
std::map<Weight, QPolynomial> X_table(int n, const Weight& mu, std::optional<int> k,
                                      const CrystalGraph* graph = nullptr);

QPolynomial X_poly(int n, const Weight& mu, const Weight& lambda, const CrystalGraph* graph = nullptr);
QPolynomial X_restricted(int n, const Weight& mu, const Weight& lambda, int k, const CrystalGraph* graph = nullptr);
QPolynomial X_alt_sum(const RootSystemData& rs, const Weight& mu, const Weight& lambda, int k,
                      const CrystalGraph* graph = nullptr);

// Multiplicities (L_k(lambda) : W(mu))_q up to q^N, memoised per (type, lambda, k, N).
const GlobalWeylExpansion& restricted_expansion(const RootSystemData& rs, const Weight& lambda, int k, int N);
QPolynomial P_restricted(const RootSystemData& rs, const Weight& mu, const Weight& lambda, int k, int N);
QPolynomial P_unrestricted(const RootSystemData& rs, const Weight& mu, const Weight& lambda, int N);

GlobalWeylExpansion level_one_multiplicities(const RootSystemData& rs, const Weight& varpi, int N);
// ((lambda,lambda) - (varpi,varpi))/2
Rational level_one_exponent(const RootSystemData& rs, const Weight& varpi, const Weight& lambda);

KostkaResult kostka(const RootSystemData& rs, const Weight& mu, const Weight& lambda, std::optional<int> k, Route route,
                    int N, const CrystalGraph* graph = nullptr);

}  // namespace weylcurrents
