#pragma once

#include "weylcurrents/crystal.hpp"
#include "weylcurrents/gchar.hpp"
#include "weylcurrents/qpoly.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace weylcurrents {

constexpr int kJsonSchema = 1;

// {"exponent": coefficient}; coefficients beyond 64 bits are written as decimal strings.
nlohmann::json poly_to_json(const QPolynomial& p);
QPolynomial poly_from_json(const nlohmann::json& j);

// Comma-separated coefficients, e.g. "2,0". Throws std::invalid_argument.
Weight parse_weight(const std::string& text, int rank);

struct JobSpec {
    std::string type = "A1";
    std::string command = "kostka";
    std::optional<Weight> mu;
    std::optional<Weight> lambda;
    std::optional<int> k;
    std::optional<int> N;
    std::string route = "paths";
    std::string format = "json";
    std::string cache_dir;
    int verbosity = 0;
    std::uint64_t seed = 1;

    friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

nlohmann::json job_to_json(const JobSpec& s);
JobSpec job_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const CrystalGraph& g);

}  // namespace weylcurrents
