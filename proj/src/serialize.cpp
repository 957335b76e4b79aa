#include "weylcurrents/serialize.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace weylcurrents {

using nlohmann::json;

json poly_to_json(const QPolynomial& p) {
    json j = json::object();
    if (p.is_zero()) return j;
    for (int e = p.min_degree(); e <= p.max_degree(); ++e) {
        const BigInt c = p.coeff(e);
        if (c == 0) continue;
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
            j[std::to_string(e)] = static_cast<std::int64_t>(c);
        else
            j[std::to_string(e)] = c.str();
    }
    return j;
}

QPolynomial poly_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("polynomial must be a JSON object");
    QPolynomial p;
    for (const auto& [key, val] : j.items()) {
        std::size_t used = 0;
        const int e = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument("bad exponent '" + key + "'");
        if (val.is_number_integer())
            p.add_term(e, BigInt(val.get<std::int64_t>()));
        else if (val.is_string())
            p.add_term(e, BigInt(val.get<std::string>()));
        else
            throw std::invalid_argument("bad coefficient for exponent " + key);
    }
    return p;
}

Weight parse_weight(const std::string& text, int rank) {
    Weight w;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed weight '" + text + "'");
        }
        while (used < part.size() && part[used] == ' ') ++used;
        if (used != part.size()) throw std::invalid_argument("malformed weight '" + text + "'");
        w.push_back(v);
    }
    if (text.empty() || text.back() == ',') throw std::invalid_argument("malformed weight '" + text + "'");
    if (static_cast<int>(w.size()) != rank)
        throw std::invalid_argument("weight '" + text + "' has " + std::to_string(w.size()) +
                                    " coefficients, rank is " + std::to_string(rank));
    return w;
}

json job_to_json(const JobSpec& s) {
    json j = {{"schema", kJsonSchema},  {"type", s.type},         {"command", s.command},
              {"route", s.route},       {"format", s.format},     {"cache_dir", s.cache_dir},
              {"verbosity", s.verbosity}, {"seed", s.seed}};
    j["mu"] = s.mu ? json(*s.mu) : json(nullptr);
    j["lambda"] = s.lambda ? json(*s.lambda) : json(nullptr);
    j["k"] = s.k ? json(*s.k) : json(nullptr);
    j["N"] = s.N ? json(*s.N) : json(nullptr);
    return j;
}

JobSpec job_from_json(const json& j) {
    if (j.value("schema", 0) != kJsonSchema) throw std::invalid_argument("unsupported job schema");
    JobSpec s;
    s.type = j.at("type").get<std::string>();
    s.command = j.at("command").get<std::string>();
    s.route = j.value("route", s.route);
    s.format = j.value("format", s.format);
    s.cache_dir = j.value("cache_dir", s.cache_dir);
    s.verbosity = j.value("verbosity", 0);
    s.seed = j.value("seed", std::uint64_t{1});
    auto opt_weight = [&](const char* key) -> std::optional<Weight> {
        if (!j.contains(key) || j[key].is_null()) return std::nullopt;
        return j[key].get<Weight>();
    };
    auto opt_int = [&](const char* key) -> std::optional<int> {
        if (!j.contains(key) || j[key].is_null()) return std::nullopt;
        return j[key].get<int>();
    };
    s.mu = opt_weight("mu");
    s.lambda = opt_weight("lambda");
    s.k = opt_int("k");
    s.N = opt_int("N");
    return s;
}

json graph_to_json(const CrystalGraph& g) {
    json verts = json::array();
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        verts.push_back({{"id", v}, {"element", element_to_string(g.vertices[v])}, {"wt", g.wt[v]}, {"D", g.energy[v]}});
    json edges = json::array();
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (int i = 0; i <= g.n; ++i)
            if (g.f_arrow[i][v] >= 0) edges.push_back({{"i", i}, {"src", v}, {"dst", g.f_arrow[i][v]}});
    return {{"schema", kJsonSchema}, {"type", "A" + std::to_string(g.n)}, {"heights", g.heights},
            {"vertices", verts}, {"edges", edges}};
}

}  // namespace weylcurrents
