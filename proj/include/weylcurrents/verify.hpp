#pragma once

#include "weylcurrents/kostka.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace weylcurrents {

struct SuiteReport {
    std::string suite;
    long checks = 0;
    std::vector<std::string> failures;
    double seconds = 0;

    bool ok() const { return failures.empty() && checks > 0; }
};

// Unset fields fall back to the acceptance grid of each suite.
struct VerifyOptions {
    std::optional<std::string> type;  // e.g. "A2"; restricts the grid to one type
    std::optional<int> max_factors;
    std::optional<int> max_mu;
    std::optional<int> max_k;
    std::optional<int> N;
    std::uint64_t seed = 1;
    std::string cache_dir;  // empty: build crystals in memory
    int threads = 0;        // 0: hardware concurrency
};

// Crystal graphs shared between checks, optionally backed by the on-disk cache.
class GraphStore {
public:
    explicit GraphStore(std::string cache_dir) : dir_(std::move(cache_dir)) {}
    const CrystalGraph& get(int n, const Weight& mu);

private:
    std::string dir_;
    std::mutex mu_;
    std::map<std::pair<int, std::vector<int>>, std::shared_ptr<CrystalGraph>> graphs_;
};

// Dominant weights of level <= k.
std::vector<Weight> level_weights(const RootSystemData& rs, int k);
// Dominant mu with sum of coefficients <= bound.
std::vector<Weight> bounded_dominant(int rank, int bound);

SuiteReport verify_cross_route(const VerifyOptions& opt);
SuiteReport verify_desk_values(const VerifyOptions& opt);
SuiteReport verify_level_one(const VerifyOptions& opt);
SuiteReport verify_frenkel_kac(const VerifyOptions& opt);
SuiteReport verify_energy_axioms(const VerifyOptions& opt);
SuiteReport verify_demazure_vs_crystal(const VerifyOptions& opt);
SuiteReport verify_demazure_limit(const VerifyOptions& opt);
SuiteReport verify_vertex_identity(const VerifyOptions& opt);
SuiteReport verify_length_oracle(const VerifyOptions& opt);
SuiteReport verify_structural(const VerifyOptions& opt);

std::vector<std::string> suite_names();  // without "all"
// Throws std::invalid_argument for an unknown name; "all" runs every suite.
std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace weylcurrents
