#include "weylcurrents/crystal.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace weylcurrents {

namespace fs = std::filesystem;
using nlohmann::json;

std::string cache_file_name(int n, const std::vector<int>& heights) {
    std::ostringstream os;
    os << "bloc_A" << n << "_h";
    for (std::size_t i = 0; i < heights.size(); ++i) os << (i ? "-" : "") << heights[i];
    if (heights.empty()) os << "none";
    os << ".json";
    return os.str();
}

void save_graph(const CrystalGraph& g, const std::string& path) {
    json j;
    j["header"] = {{"format_version", kCacheFormatVersion},
                   {"n", g.n},
                   {"heights", g.heights},
                   {"energy_orientation", g.orientation}};
    json verts = json::array();
    for (const auto& b : g.vertices) {
        json v = json::array();
        for (const auto& c : b) v.push_back(c.letters());
        verts.push_back(v);
    }
    j["vertices"] = verts;
    json arrows = json::array();
    for (int i = 0; i <= g.n; ++i)
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            if (g.f_arrow[i][v] >= 0) arrows.push_back({i, v, g.f_arrow[i][v]});
    j["arrows"] = arrows;
    j["energy"] = g.energy;

    static std::atomic<unsigned> counter{0};
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    std::ostringstream tmpname;
    tmpname << path << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
            << std::chrono::steady_clock::now().time_since_epoch().count() << '.' << counter++;
    {
        std::ofstream out(tmpname.str(), std::ios::binary | std::ios::trunc);
        if (!out) throw CrystalError("cannot write cache file " + tmpname.str());
        out << j.dump() << '\n';
        if (!out) throw CrystalError("short write to cache file " + tmpname.str());
    }
    fs::rename(tmpname.str(), target);
}

CrystalGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CrystalError("cannot open cache file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw CrystalError("cache file " + path + " is not valid JSON: " + e.what());
    }
    try {
        const auto& h = j.at("header");
        if (h.at("format_version").get<int>() != kCacheFormatVersion)
            throw CrystalError("cache file " + path + " has an unsupported format version");
        CrystalGraph g;
        g.n = h.at("n").get<int>();
        g.heights = h.at("heights").get<std::vector<int>>();
        g.orientation = h.at("energy_orientation").get<int>();
        if (g.n < 1 || g.n > 30) throw CrystalError("cache file " + path + ": bad rank");
        for (const auto& v : j.at("vertices")) {
            TensorElement b;
            for (const auto& c : v) b.push_back(ColumnElement::from_letters(c.get<std::vector<int>>()));
            g.vertices.push_back(std::move(b));
        }
        if (!std::is_sorted(g.vertices.begin(), g.vertices.end()))
            throw CrystalError("cache file " + path + ": vertices out of order");
        const int V = static_cast<int>(g.vertices.size());
        g.f_arrow.assign(g.n + 1, std::vector<int>(V, -1));
        g.e_arrow.assign(g.n + 1, std::vector<int>(V, -1));
        for (const auto& a : j.at("arrows")) {
            const int i = a.at(0), s = a.at(1), t = a.at(2);
            if (i < 0 || i > g.n || s < 0 || s >= V || t < 0 || t >= V)
                throw CrystalError("cache file " + path + ": arrow out of range");
            g.f_arrow[i][s] = t;
            g.e_arrow[i][t] = s;
        }
        g.energy = j.at("energy").get<std::vector<int>>();
        if (static_cast<int>(g.energy.size()) != V) throw CrystalError("cache file " + path + ": energy table size");
        for (const auto& b : g.vertices) {
            auto st = tensor_stats(g.n, b);
            g.wt.push_back(st.wt);
            g.eps.push_back(st.eps);
            g.phi.push_back(st.phi);
        }
        g.component = classical_components(g).id;
        return g;
    } catch (const json::exception& e) {
        throw CrystalError("cache file " + path + " is malformed: " + e.what());
    }
}

CrystalGraph load_or_build(int n, const std::vector<int>& heights, const std::string& cache_dir) {
    if (cache_dir.empty()) return build_crystal_graph(n, heights);
    const fs::path p = fs::path(cache_dir) / cache_file_name(n, heights);
    if (fs::exists(p)) {
        auto g = load_graph(p.string());
        if (g.n != n || g.heights != heights) throw CrystalError("cache file " + p.string() + " has a mismatched header");
        if (g.orientation != kEnergyOrientation)
            throw CrystalError("cache file " + p.string() + " was written with another energy orientation");
        return g;
    }
    auto g = build_crystal_graph(n, heights);
    save_graph(g, p.string());
    return g;
}

}  // namespace weylcurrents
