#include "weylcurrents/kostka.hpp"
#include "weylcurrents/serialize.hpp"
#include "weylcurrents/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace weylcurrents;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Raw {
    std::string type = "A1";
    int rank = 0;
    std::string mu, lambda;
    std::optional<int> k, N;
    std::string route = "paths";
    bool all_routes = false;
    std::string format;
    std::string cache_dir;
    std::string output;
    bool dump_job = false;
    int verbosity = 0;
    std::uint64_t seed = 1;
};

std::string resolve_type(const std::string& type, int rank) {
    const bool has_digits = type.find_first_of("0123456789") != std::string::npos;
    if (!has_digits) {
        if (rank <= 0) throw UsageError("--type " + type + " needs --rank");
        return type + std::to_string(rank);
    }
    const auto rs = build_root_system(type);
    if (rank > 0 && rank != rs.rank) throw UsageError("--rank " + std::to_string(rank) + " contradicts --type " + type);
    return rs.name();
}

std::string resolve_cache(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("WEYLCURRENTS_CACHE")) return env;
    return {};
}

JobSpec to_job(const std::string& command, const Raw& r) {
    JobSpec s;
    s.command = command;
    s.type = resolve_type(r.type, r.rank);
    const auto rs = build_root_system(s.type);
    if (!r.mu.empty()) s.mu = parse_weight(r.mu, rs.rank);
    if (!r.lambda.empty()) s.lambda = parse_weight(r.lambda, rs.rank);
    s.k = r.k;
    s.N = r.N;
    s.route = r.all_routes ? "all" : r.route;
    s.format = r.format.empty() ? (command == "export" ? "dot" : "json") : r.format;
    s.cache_dir = resolve_cache(r.cache_dir);
    s.verbosity = r.verbosity;
    s.seed = r.seed;
    return s;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void csv_poly(std::ostream& os, const std::string& prefix, const QPolynomial& p) {
    const json j = poly_to_json(p);
    for (const auto& [e, c] : j.items()) os << prefix << ',' << e << ',' << c << '\n';
}

std::string quoted(const Weight& w) { return '"' + weight_to_string(w) + '"'; }

int cmd_kostka(const JobSpec& s, const std::string& output) {
    const auto rs = build_root_system(s.type);
    if (!s.mu) throw UsageError("kostka needs --mu");
    const Weight mu = *s.mu;
    if (!is_dominant(mu)) throw UsageError("--mu must be dominant");
    if (s.k && *s.k < 1) throw UsageError("--k must be positive");

    std::vector<Route> routes;
    if (s.route == "all") {
        if (rs.family != Family::A) throw UsageError("path and alternating-sum routes need type A");
        routes = s.k ? std::vector<Route>{Route::Paths, Route::AltSum, Route::Characters}
                     : std::vector<Route>{Route::Paths, Route::Characters};
    } else if (s.route == "paths") {
        routes = {Route::Paths};
    } else if (s.route == "altsum") {
        if (!s.k) throw UsageError("--route altsum needs --k");
        routes = {Route::AltSum};
    } else if (s.route == "chars") {
        routes = {Route::Characters};
    } else {
        throw UsageError("unknown route '" + s.route + "'");
    }
    const bool crystal = std::any_of(routes.begin(), routes.end(), [](Route r) { return r != Route::Characters; });
    if (crystal && rs.family != Family::A) throw UsageError("route " + s.route + " needs type A");

    std::vector<Weight> lambdas;
    if (s.lambda) {
        lambdas = {*s.lambda};
    } else if (s.k) {
        lambdas = level_weights(rs, *s.k);
    } else {
        for (const auto& [w, m] : freudenthal_dominant(rs, mu)) lambdas.push_back(w);
    }
    const int N = s.N.value_or(local_weyl_top_degree(rs, mu));

    std::optional<CrystalGraph> graph;
    if (crystal) graph = load_or_build(rs.rank, heights_of(mu), s.cache_dir);

    json rows = json::array();
    std::ostringstream csv;
    csv << "type,mu,lambda,k,route,exponent,coefficient\n";
    bool all_agree = true;
    for (const auto& lambda : lambdas) {
        json row = {{"mu", mu}, {"lambda", lambda}, {"k", s.k ? json(*s.k) : json(nullptr)}, {"N", N}};
        json per = json::object();
        std::optional<QPolynomial> first;
        bool agree = true, nonzero = false;
        for (Route r : routes) {
            const auto res = kostka(rs, mu, lambda, s.k, r, N, graph ? &*graph : nullptr);
            per[route_name(r)] = poly_to_json(res.value);
            if (!first) first = res.value;
            agree = agree && res.value == *first;
            nonzero = nonzero || !res.value.is_zero();
            csv_poly(csv,
                     s.type + ',' + quoted(mu) + ',' + quoted(lambda) + ',' + (s.k ? std::to_string(*s.k) : "") + ',' +
                         route_name(r),
                     res.value);
        }
        if (!s.lambda && !nonzero) continue;
        row["routes"] = per;
        row["polynomial"] = poly_to_json(*first);
        if (routes.size() > 1) row["agree"] = agree;
        all_agree = all_agree && agree;
        rows.push_back(row);
    }

    if (s.format == "csv") {
        emit(csv.str(), output);
    } else if (s.format == "json") {
        json out = {{"schema", kJsonSchema}, {"command", "kostka"}, {"type", s.type}};
        if (s.lambda) {
            for (auto& [key, val] : rows.at(0).items()) out[key] = val;
        } else {
            out["mu"] = mu;
            out["k"] = s.k ? json(*s.k) : json(nullptr);
            out["rows"] = rows;
        }
        emit(out.dump(2) + "\n", output);
    } else {
        throw UsageError("kostka supports --format json or csv");
    }
    if (!all_agree) {
        std::cerr << "routes disagree\n";
        return 1;
    }
    return 0;
}

int cmd_decompose(const JobSpec& s, const std::string& output) {
    const auto rs = build_root_system(s.type);
    if (!s.lambda) throw UsageError("decompose needs --lambda");
    const int k = s.k.value_or(1);
    if (k < 1 || !in_level(rs, *s.lambda, k))
        throw UsageError("lambda=" + weight_to_string(*s.lambda) + " is not a dominant weight of level <= " +
                         std::to_string(k));
    const int N = s.N.value_or(10);
    if (N < 0) throw UsageError("--N must be nonnegative");
    const auto e = expand_in_global_weyl(rs, integrable_irreps(rs, *s.lambda, k, N), N);

    if (s.format == "csv") {
        std::ostringstream csv;
        csv << "mu,exponent,coefficient,trusted\n";
        for (const auto& [mu, p] : e.multiplicities) {
            const json terms = poly_to_json(p);
            for (const auto& [ex, c] : terms.items())
                csv << quoted(mu) << ',' << ex << ',' << c << ',' << (e.trusted(mu) ? "true" : "false") << '\n';
        }
        emit(csv.str(), output);
    } else if (s.format == "json") {
        json mult = json::object(), trusted = json::object(), top = json::object();
        for (const auto& [mu, p] : e.multiplicities) {
            mult[weight_to_string(mu)] = poly_to_json(p);
            trusted[weight_to_string(mu)] = e.trusted(mu);
        }
        for (const auto& [mu, d] : e.top_degree) top[weight_to_string(mu)] = d;
        json out = {{"schema", kJsonSchema},
                    {"command", "decompose"},
                    {"type", s.type},
                    {"lambda", *s.lambda},
                    {"k", k},
                    {"N", N},
                    {"remainder_zero", e.remainder_zero},
                    {"multiplicities", mult},
                    {"trusted", trusted},
                    {"top_degree", top}};
        emit(out.dump(2) + "\n", output);
    } else {
        throw UsageError("decompose supports --format json or csv");
    }
    if (!e.remainder_zero) {
        std::cerr << "expansion left a nonzero remainder\n";
        return 1;
    }
    return 0;
}

int cmd_export(const JobSpec& s, const std::string& output) {
    const auto rs = build_root_system(s.type);
    if (rs.family != Family::A) throw UsageError("export supports type A only");
    if (!s.mu) throw UsageError("export needs --mu");
    if (!is_dominant(*s.mu)) throw UsageError("--mu must be dominant");
    const auto g = load_or_build(rs.rank, heights_of(*s.mu), s.cache_dir);
    if (s.format == "dot")
        emit(to_dot(g), output);
    else if (s.format == "json")
        emit(graph_to_json(g).dump(2) + "\n", output);
    else
        throw UsageError("export supports --format dot or json");
    return 0;
}

int run_job(const JobSpec& s, const std::string& output) {
    if (s.command == "kostka") return cmd_kostka(s, output);
    if (s.command == "decompose") return cmd_decompose(s, output);
    if (s.command == "export") return cmd_export(s, output);
    throw UsageError("unknown command '" + s.command + "'");
}

void add_common(CLI::App* sub, Raw& r) {
    sub->add_option("--type", r.type, "Cartan type, e.g. A2 or D4 (or a family letter with --rank)");
    sub->add_option("--rank", r.rank, "Rank when --type is a bare family letter");
    sub->add_option("--k", r.k, "Level");
    sub->add_option("--N", r.N, "q-degree cutoff");
    sub->add_option("--cache-dir", r.cache_dir, "Crystal cache directory (default: $WEYLCURRENTS_CACHE)");
    sub->add_option("--seed", r.seed, "Seed for randomized property checks");
    sub->add_option("--output,-o", r.output, "Write to a file instead of stdout");
    sub->add_flag("-v,--verbose", r.verbosity, "Verbosity");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded characters of current algebra modules and level-restricted Kostka polynomials"};
    app.require_subcommand(1);
    Raw raw;

    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka polynomials by paths, alternating sums or characters");
    add_common(kostka_cmd, raw);
    kostka_cmd->add_option("--mu", raw.mu, "Weight of the global Weyl module, e.g. 2,0")->required();
    kostka_cmd->add_option("--lambda", raw.lambda, "Highest weight of the integrable module (all if omitted)");
    kostka_cmd->add_option("--route", raw.route, "paths|altsum|chars|all")
        ->check(CLI::IsMember({"paths", "altsum", "chars", "all"}));
    kostka_cmd->add_flag("--all-routes", raw.all_routes, "Compute every route and compare");
    kostka_cmd->add_option("--format", raw.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    kostka_cmd->add_flag("--dump-job", raw.dump_job, "Print the job as JSON and exit");

    auto* decompose_cmd = app.add_subcommand("decompose", "Global Weyl multiplicities of L_k(lambda)");
    add_common(decompose_cmd, raw);
    decompose_cmd->add_option("--lambda", raw.lambda, "Highest weight")->required();
    decompose_cmd->add_option("--format", raw.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    decompose_cmd->add_flag("--dump-job", raw.dump_job, "Print the job as JSON and exit");

    auto* export_cmd = app.add_subcommand("export", "Export the crystal B_loc(mu) with energies");
    add_common(export_cmd, raw);
    export_cmd->add_option("--mu", raw.mu, "Weight, e.g. 2 for two copies of B^{1,1} in A1")->required();
    export_cmd->add_option("--format", raw.format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
    export_cmd->add_flag("--dump-job", raw.dump_job, "Print the job as JSON and exit");

    std::string job_file;
    auto* job_cmd = app.add_subcommand("job", "Run a job described by a JSON file");
    job_cmd->add_option("file", job_file, "Job file")->required();
    job_cmd->add_option("--output,-o", raw.output, "Write to a file instead of stdout");

    std::string suite;
    VerifyOptions vopt;
    std::optional<int> vmax_factors, vmax_mu, vmax_k;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    add_common(verify_cmd, raw);
    verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required();
    verify_cmd->add_option("--max-factors", vmax_factors, "Largest number of tensor factors");
    verify_cmd->add_option("--max-mu", vmax_mu, "Bound on the coefficient sum of mu");
    verify_cmd->add_option("--max-k", vmax_k, "Largest level");
    verify_cmd->add_option("--threads", vopt.threads, "Worker threads (0: all cores)");
    bool type_given = false;
    verify_cmd->callback([&] { type_given = verify_cmd->count("--type") > 0; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify_cmd) {
            if (type_given || raw.rank > 0) vopt.type = resolve_type(raw.type, raw.rank);
            vopt.max_factors = vmax_factors;
            vopt.max_mu = vmax_mu;
            vopt.max_k = vmax_k;
            vopt.N = raw.N;
            vopt.seed = raw.seed;
            vopt.cache_dir = resolve_cache(raw.cache_dir);
            const auto reports = run_suite(suite, vopt);
            json arr = json::array();
            bool ok = true;
            for (const auto& r : reports) {
                arr.push_back({{"suite", r.suite},
                               {"checks", r.checks},
                               {"ok", r.ok()},
                               {"seconds", r.seconds},
                               {"failures", r.failures}});
                ok = ok && r.ok();
                std::cerr << (r.ok() ? "PASS " : "FAIL ") << r.suite << " (" << r.checks << " checks, "
                          << r.failures.size() << " failures)\n";
            }
            emit(json({{"schema", kJsonSchema}, {"command", "verify"}, {"ok", ok}, {"suites", arr}}).dump(2) + "\n",
                 raw.output);
            return ok ? 0 : 1;
        }
        JobSpec spec;
        if (*job_cmd) {
            std::ifstream in(job_file);
            if (!in) throw UsageError("cannot read " + job_file);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                throw UsageError(std::string("job file is not valid JSON: ") + e.what());
            }
            spec = job_from_json(j);
            spec.type = resolve_type(spec.type, 0);
            if (spec.cache_dir.empty()) spec.cache_dir = resolve_cache("");
        } else {
            const std::string command = *kostka_cmd ? "kostka" : *decompose_cmd ? "decompose" : "export";
            spec = to_job(command, raw);
            if (raw.dump_job) {
                emit(job_to_json(spec).dump(2) + "\n", raw.output);
                return 0;
            }
        }
        return run_job(spec, raw.output);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RootSystemError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
