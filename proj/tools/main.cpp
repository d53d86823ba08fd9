#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dgeo/geometry.hpp"
#include "dgeo/io.hpp"
#include "dgeo/morse.hpp"

using nlohmann::json;
using namespace dgeo;

namespace {

constexpr const char* kVersion = "0.1.0";

SimpleGraph make_generated(const std::string& family, const std::vector<std::string>& params,
                           std::uint64_t seed) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw input_error("generator '" + family + "' expects " + std::to_string(k) +
                              " parameter(s)");
    };
    auto as_int = [](const std::string& s) {
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            throw input_error("bad integer parameter: " + s);
        }
    };
    if (family == "cyclic") { need(1); return cyclic_graph(as_int(params[0])); }
    if (family == "complete") { need(1); return complete_graph(as_int(params[0])); }
    if (family == "path") { need(1); return path_graph(as_int(params[0])); }
    if (family == "wheel") { need(1); return wheel_graph(as_int(params[0])); }
    if (family == "cross-polytope") { need(1); return cross_polytope(as_int(params[0])); }
    if (family == "octahedron") { need(0); return octahedron(); }
    if (family == "icosahedron") { need(0); return icosahedron(); }
    if (family == "dodecahedron") { need(0); return dodecahedron(); }
    if (family == "cube") { need(0); return cube_graph(); }
    if (family == "er" || family == "erdos-renyi") {
        need(2);
        double p;
        try {
            p = std::stod(params[1]);
        } catch (const std::exception&) {
            throw input_error("bad probability: " + params[1]);
        }
        return erdos_renyi(as_int(params[0]), p, seed);
    }
    throw input_error("unknown generator family: " + family);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw input_error("cannot open output file: " + path);
    out << text;
}

json report_to_json(const Report& r) {
    json j;
    j["check"] = r.check;
    j["pass"] = r.pass;
    j["details"] = json::array();
    for (const auto& d : r.details)
        j["details"].push_back({{"context", d.context}, {"lhs", d.lhs}, {"rhs", d.rhs},
                                {"ok", d.ok}});
    return j;
}

void print_report(const Report& r, bool as_json) {
    if (as_json) {
        std::cout << report_to_json(r).dump(2) << "\n";
        return;
    }
    std::cout << r.check << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& d : r.details)
        if (!d.ok)
            std::cout << "  " << d.context << ": " << d.lhs << " != " << d.rhs << "\n";
}

struct GraphSource {
    std::string graph_file;
    std::vector<std::string> gen_args;

    SimpleGraph load(std::uint64_t seed) const {
        if (!graph_file.empty()) return read_graph_file(graph_file);
        if (!gen_args.empty())
            return make_generated(gen_args[0],
                                  {gen_args.begin() + 1, gen_args.end()}, seed);
        throw input_error("provide --graph FILE or --gen FAMILY [PARAMS]");
    }
};

int run_gen(const std::string& family, const std::vector<std::string>& params,
            std::uint64_t seed, const std::string& out) {
    SimpleGraph g = make_generated(family, params, seed);
    write_text(out, graph_to_json(g).dump(2) + "\n");
    return 0;
}

int run_analyze(const GraphSource& src, const std::string& function_file, std::uint64_t seed,
                const std::string& out) {
    SimpleGraph g = src.load(seed);
    json j;
    j["version"] = kVersion;
    j["seed"] = seed;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["f_vector"] = f_vector(g);
    j["chi"] = euler_characteristic(g);
    j["dimension"] = inductive_dimension(g).str();
    json curv = json::array();
    for (VertexId x = 0; x < g.vertex_count(); ++x) curv.push_back(curvature(g, x).str());
    j["curvature"] = curv;

    if (!function_file.empty()) {
        VertexFunction f = read_function_file(function_file, g.vertex_count());
        json verts = json::array();
        for (VertexId x = 0; x < g.vertex_count(); ++x) {
            VertexReport r = analyze_vertex(g, f, x);
            verts.push_back({{"vertex", x},
                             {"i_f", r.index_f},
                             {"i_neg_f", r.index_neg_f},
                             {"j_f", r.j.str()},
                             {"w", r.w},
                             {"chi_b", r.chi_b},
                             {"curvature", r.k.str()}});
        }
        j["vertices"] = verts;
    }
    write_text(out, j.dump(2) + "\n");
    return 0;
}

std::vector<VertexFunction> make_functions(const SimpleGraph& g, const std::string& function_file,
                                           long long trials, std::mt19937_64& rng) {
    std::vector<VertexFunction> fs;
    if (!function_file.empty()) {
        fs.push_back(read_function_file(function_file, g.vertex_count()));
        return fs;
    }
    for (long long i = 0; i < std::max<long long>(1, trials); ++i)
        fs.push_back(random_vertex_function(g.vertex_count(), rng));
    return fs;
}

Report verify_index_expectation(const SimpleGraph& g, long long mc_trials, std::mt19937_64& rng) {
    Report r{"index-expectation"};
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        Rational k = curvature(g, x);
        if (g.degree(x) <= kExactExpectationDegreeLimit) {
            Rational e = index_expectation_exact(g, x);
            r.record("vertex " + std::to_string(x) + ": exact E[i_f]", e.str(), k.str(), e == k);
        } else {
            auto est = index_expectation_monte_carlo(g, x, mc_trials, rng());
            bool ok = std::abs(est.mean - k.to_double()) <= 4.0 * est.stderr_ + 1e-12;
            r.record("vertex " + std::to_string(x) + ": monte-carlo E[i_f]",
                     std::to_string(est.mean) + " +- " + std::to_string(est.stderr_), k.str(), ok);
        }
    }
    r.record("all vertices", "ok", "ok", r.pass, true);
    return r;
}

int run_verify(const std::string& check, const GraphSource& src, const std::string& function_file,
               long long trials, std::uint64_t seed, std::optional<int> dim, bool as_json,
               long long mc_trials) {
    SimpleGraph g = src.load(seed);
    std::mt19937_64 rng(seed);
    std::vector<Report> reports;

    auto functions = [&]() { return make_functions(g, function_file, trials, rng); };

    if (check == "gauss-bonnet" || check == "all") reports.push_back(verify_gauss_bonnet(g));
    if (check == "transfer" || check == "all") reports.push_back(verify_transfer(g));
    if (check == "poincare-hopf" || check == "all")
        for (const auto& f : functions()) reports.push_back(verify_poincare_hopf(g, f));
    if (check == "index-formula" || check == "all")
        for (const auto& f : functions()) reports.push_back(verify_index_formula(g, f));
    if (check == "intermediate" || check == "all")
        for (const auto& f : functions()) reports.push_back(verify_intermediate(g, f));
    if (check == "index-stability" || check == "all") {
        long long pairs = std::max<long long>(1, trials);
        for (long long i = 0; i < pairs; ++i)
            reports.push_back(verify_index_stability(g, random_vertex_function(g.vertex_count(), rng),
                                                     random_vertex_function(g.vertex_count(), rng)));
    }
    if (check == "index-expectation" || check == "all")
        reports.push_back(verify_index_expectation(g, mc_trials, rng));
    if (check == "zero-curvature") {
        int d;
        if (dim) {
            d = *dim;
        } else {
            Rational id = inductive_dimension(g);
            if (!id.is_integer())
                throw input_error("graph has non-integer dimension " + id.str() +
                                  "; pass --dim explicitly");
            d = (int)id.num();
        }
        reports.push_back(verify_zero_curvature(g, d, functions()));
    }
    if (reports.empty()) throw input_error("unknown check: " + check);

    bool all_pass = true;
    if (as_json) {
        json j;
        j["version"] = kVersion;
        j["seed"] = seed;
        j["check"] = check;
        j["reports"] = json::array();
        for (const auto& r : reports) {
            j["reports"].push_back(report_to_json(r));
            all_pass = all_pass && r.pass;
        }
        j["pass"] = all_pass;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            print_report(r, false);
            all_pass = all_pass && r.pass;
        }
        std::cout << (all_pass ? "PASS" : "FAIL") << "\n";
    }
    return all_pass ? 0 : 1;
}

int run_hypersurface(const GraphSource& src, const std::string& function_file,
                     const std::string& level_str, std::optional<int> sphere_x, bool complete,
                     std::uint64_t seed, const std::string& out_prefix) {
    SimpleGraph g = src.load(seed);
    VertexFunction f;
    if (!function_file.empty()) {
        f = read_function_file(function_file, g.vertex_count());
    } else {
        std::mt19937_64 rng(seed);
        f = random_vertex_function(g.vertex_count(), rng);
    }

    HypersurfaceGraph h;
    if (sphere_x) {
        h = sphere_hypersurface(g, f, *sphere_x, complete);
    } else {
        Rational level = rational_from_json(json(level_str.empty() ? "0" : level_str));
        // random functions have rank values 0..n-1; default to a half-integer
        // cut near the middle so both sides are populated
        if (function_file.empty() && level_str.empty())
            level = Rational(2 * (g.vertex_count() / 2) - 1, 2);
        auto p = sign_partition(g, f, level);
        h = hypersurface_graph(g, p);
        if (complete) h = complete_hypersurface(h);
    }

    if (h.graph.empty())
        std::cerr << "warning: hypersurface is empty (function does not change sign)\n";

    FVector fv = f_vector(h.graph);
    std::ostringstream csv;
    csv << "components,chi,f_vector\n"
        << connected_components(h.graph).size() << "," << euler_characteristic(h.graph) << ",\"";
    for (size_t i = 0; i < fv.size(); ++i) csv << (i ? " " : "") << fv[i];
    csv << "\"\n";

    if (out_prefix.empty() || out_prefix == "-") {
        std::cout << hypersurface_to_json(h).dump(2) << "\n";
    } else {
        write_text(out_prefix + ".json", hypersurface_to_json(h).dump(2) + "\n");
        write_text(out_prefix + ".dot", hypersurface_to_dot(h));
        write_text(out_prefix + ".csv", csv.str());
    }
    return 0;
}

int run_sphere(const GraphSource& src, int vertex, std::uint64_t seed, const std::string& out) {
    SimpleGraph g = src.load(seed);
    Subgraph s = unit_sphere(g, vertex);
    json j = graph_to_json(s.graph);
    j["to_host"] = s.to_host;
    write_text(out, j.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete curvature, Morse indices and hypersurface graphs on simple graphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string out;
    std::string function_file;
    GraphSource src;
    bool as_json = false;
    long long trials = 20;
    long long mc_trials = 100000;
    int threads = 1;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--graph", src.graph_file, "input graph JSON file");
        cmd->add_option("--gen", src.gen_args, "generator family and parameters")
            ->expected(-1);
        cmd->add_option("--seed", seed, "master random seed");
        cmd->add_option("--threads", threads,
                        "worker thread count (accepted; current build is sequential)");
    };

    auto* gen = app.add_subcommand("gen", "generate a graph");
    std::string family;
    std::vector<std::string> params;
    gen->add_option("family", family, "generator family")->required();
    gen->add_option("params", params, "generator parameters");
    gen->add_option("--seed", seed, "random seed (er)");
    gen->add_option("--out,-o", out, "output file (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "f-vector, chi, dimension, curvature, indices");
    add_source(analyze);
    analyze->add_option("--function", function_file, "vertex function JSON file");
    analyze->add_option("--out,-o", out, "output file");
    analyze->add_flag("--json", as_json, "JSON output (always on for analyze)");

    auto* verify = app.add_subcommand("verify", "run an identity verifier");
    std::string check;
    std::optional<int> dim;
    verify->add_option("check", check, "gauss-bonnet|poincare-hopf|index-formula|"
                                       "index-expectation|transfer|intermediate|"
                                       "index-stability|zero-curvature|all")
        ->required();
    add_source(verify);
    verify->add_option("--function", function_file, "vertex function JSON file");
    verify->add_option("--trials", trials, "number of random functions");
    verify->add_option("--mc-trials", mc_trials, "monte-carlo trials per high-degree vertex");
    verify->add_option("--dim", dim, "claimed dimension for zero-curvature");
    verify->add_flag("--json", as_json, "JSON report");

    auto* hyper = app.add_subcommand("hypersurface", "build G_f or A_f(x)/B_f(x)");
    add_source(hyper);
    hyper->add_option("--function", function_file, "vertex function JSON file");
    std::string level_str;
    hyper->add_option("--level", level_str, "cut level c (integer or p/q)");
    std::optional<int> sphere_x;
    hyper->add_option("--sphere", sphere_x, "build the sphere hypersurface at vertex x");
    bool complete = false;
    hyper->add_flag("--complete", complete, "apply the completion (centers)");
    hyper->add_option("--out,-o", out, "output prefix (writes .json/.dot/.csv)");

    auto* sphere = app.add_subcommand("sphere", "extract a unit sphere S(x)");
    add_source(sphere);
    int sphere_vertex = 0;
    sphere->add_option("--vertex,-x", sphere_vertex, "center vertex")->required();
    sphere->add_option("--out,-o", out, "output file");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return run_gen(family, params, seed, out);
        if (analyze->parsed()) return run_analyze(src, function_file, seed, out);
        if (verify->parsed())
            return run_verify(check, src, function_file, trials, seed, dim, as_json, mc_trials);
        if (hyper->parsed())
            return run_hypersurface(src, function_file, level_str, sphere_x, complete, seed, out);
        if (sphere->parsed()) return run_sphere(src, sphere_vertex, seed, out);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
