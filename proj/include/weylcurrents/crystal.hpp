#pragma once

#include "weylcurrents/root_system.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylcurrents {

struct CrystalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A column of B^{r,1} in type A_n: an r-subset of {1..n+1}, stored as a bitmask (bit j-1 for letter j).
struct ColumnElement {
    std::uint32_t bits = 0;

    static ColumnElement from_letters(const std::vector<int>& letters);
    static ColumnElement highest(int r);
    std::vector<int> letters() const;
    int height() const;
    bool contains(int j) const { return (bits >> (j - 1)) & 1u; }

    friend bool operator==(const ColumnElement& a, const ColumnElement& b) { return a.bits == b.bits; }
    friend bool operator<(const ColumnElement& a, const ColumnElement& b) { return a.letters() < b.letters(); }
};

using TensorElement = std::vector<ColumnElement>;

enum class CrystalOp { E, F };

std::vector<ColumnElement> columns(int n, int r);
Weight column_weight(int n, const ColumnElement& c);
std::optional<ColumnElement> column_apply(int n, CrystalOp op, int i, const ColumnElement& c);

struct Acted {
    TensorElement element;
    std::size_t position = 0;  // factor the operator acted on
};
std::optional<Acted> apply_op_at(int n, CrystalOp op, int i, const TensorElement& b);
std::optional<TensorElement> apply_op(int n, CrystalOp op, int i, const TensorElement& b);

struct TensorStats {
    Weight wt;
    std::vector<int> eps;  // indexed by 0..n
    std::vector<int> phi;
};
TensorStats tensor_stats(int n, const TensorElement& b);
Weight tensor_weight(int n, const TensorElement& b);
bool classical_highest(int n, const TensorElement& b);

// Heights of B_loc(mu): m_1 copies of 1, then m_2 copies of 2, ...
std::vector<int> heights_of(const Weight& mu);
TensorElement highest_element(const std::vector<int>& heights);
std::vector<TensorElement> all_elements(int n, const std::vector<int>& heights);

std::pair<ColumnElement, ColumnElement> combinatorial_R(int n, const ColumnElement& b, const ColumnElement& c);

// +1: H(e_0 x) = H(x) + 1 when e_0 acts on the left factor of x and of R(x), -1 when on the right in both.
// The opposite sign is kept selectable so the calibration can show it fails.
constexpr int kEnergyOrientation = 1;
int local_energy(int n, const ColumnElement& b, const ColumnElement& c, int orientation = kEnergyOrientation);
// D(b) = sum_{i<j} H(b_i (x) b_j'), b_j' being b_j carried next to b_i through R.
int energy_D(int n, const TensorElement& b, int orientation = kEnergyOrientation);

struct CrystalGraph {
    int n = 0;
    std::vector<int> heights;
    int orientation = kEnergyOrientation;
    std::vector<TensorElement> vertices;           // lexicographic order
    std::vector<std::vector<int>> f_arrow;         // [i][v] -> target vertex or -1, i in 0..n
    std::vector<std::vector<int>> e_arrow;
    std::vector<Weight> wt;
    std::vector<std::vector<int>> eps, phi;        // [v][i]
    std::vector<int> component;
    std::vector<int> energy;

    int index_of(const TensorElement& b) const;
};

CrystalGraph build_crystal_graph(int n, const std::vector<int>& heights, int orientation = kEnergyOrientation);

struct Components {
    std::vector<int> id;       // per vertex
    std::vector<int> highest;  // per component, vertex index of the classical highest element
};
Components classical_components(const CrystalGraph& g);

struct AxiomReport {
    bool ok = true;
    std::vector<std::string> failures;
};
// Crystal axioms, e/f adjointness and the three energy conditions.
AxiomReport check_crystal_graph(const CrystalGraph& g);

// Picks the unique orientation for which the energy conditions hold on a calibration grid.
int calibrate_energy_orientation();

struct RestrictedPath {
    TensorElement element;
    Weight wt;
    int D = 0;
    int eps0 = 0;
};
// k = nullopt: all classical highest elements; otherwise also eps_0 <= k.
std::vector<RestrictedPath> restricted_paths(int n, const Weight& mu, std::optional<int> k,
                                             const CrystalGraph* graph = nullptr);

std::string element_to_string(const TensorElement& b);
std::string to_dot(const CrystalGraph& g);

// Versioned on-disk cache, one JSON file per (n, heights).
constexpr int kCacheFormatVersion = 1;
std::string cache_file_name(int n, const std::vector<int>& heights);
void save_graph(const CrystalGraph& g, const std::string& path);
CrystalGraph load_graph(const std::string& path);
CrystalGraph load_or_build(int n, const std::vector<int>& heights, const std::string& cache_dir);

}  // namespace weylcurrents
