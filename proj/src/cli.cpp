#include "edgesub/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "edgesub/coefficient.hpp"
#include "edgesub/counting.hpp"
#include "edgesub/errors.hpp"
#include "edgesub/family.hpp"
#include "edgesub/json_io.hpp"
#include "edgesub/property.hpp"
#include "edgesub/tutte.hpp"
#include "edgesub/verify.hpp"

namespace edgesub {

namespace {

using nlohmann::json;

struct CliState {
    std::string format = "json";
    std::uint64_t seed = 0;
    Budgets budgets;
    std::string properties_path;
    std::vector<PropertySpec> custom_properties;
};

// Properties defined in a JSON config: forbidden-minor lists plus optional
// criterion thresholds.
void load_properties_config(CliState& state) {
    std::string path = state.properties_path;
    if (path.empty()) {
        if (const char* env = std::getenv("EDGESUB_PROPERTIES")) path = env;
    }
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open properties config: " + path);
    json config;
    try {
        in >> config;
    } catch (const json::exception& e) {
        throw parse_error("properties config: " + std::string(e.what()));
    }
    for (const auto& entry : config.value("properties", json::array())) {
        std::string name = entry.at("name").get<std::string>();
        std::vector<Graph> minors;
        for (const auto& minor : entry.at("forbidden_minors")) {
            std::vector<std::pair<int, int>> edges;
            int max_vertex = -1;
            for (const auto& edge : minor) {
                int u = edge.at(0).get<int>();
                int v = edge.at(1).get<int>();
                edges.emplace_back(u, v);
                max_vertex = std::max({max_vertex, u, v});
            }
            int declared = entry.value("vertices", -1);
            minors.emplace_back(std::max(max_vertex + 1, declared), std::move(edges));
        }
        PropertySpec spec = make_minor_free_property(name, std::move(minors));
        if (entry.contains("matching_threshold"))
            spec.matching_threshold = entry["matching_threshold"].get<int>();
        if (entry.contains("star_threshold"))
            spec.star_threshold = entry["star_threshold"].get<int>();
        if (entry.contains("treewidth_bound"))
            spec.treewidth_bound = entry["treewidth_bound"].get<int>();
        state.custom_properties.push_back(std::move(spec));
    }
}

PropertySpec lookup_property(const CliState& state, const std::string& name) {
    for (const auto& spec : state.custom_properties)
        if (spec.name == name) return spec;
    return builtin_property(name);
}

std::string config_hash(const CliState& state) {
    std::ostringstream plain;
    plain << state.seed << '|' << state.budgets.fracture_budget << '|'
          << state.budgets.subset_budget << '|' << state.budgets.phi_k_cap << '|'
          << state.budgets.iso_component_cap << '|' << state.properties_path;
    std::ostringstream hex;
    hex << std::hex << std::hash<std::string>{}(plain.str());
    return hex.str();
}

void emit(std::ostream& os, const CliState& state, const json& result) {
    if (state.format == "table") {
        for (const auto& [key, value] : result.items())
            os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
               << '\n';
    } else {
        os << result.dump(2) << '\n';
    }
}

class ElapsedTimer {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

int dispatch_count(const CliState& state, const std::string& property, int k,
                   const std::string& graph_file, const std::string& mode, double eps,
                   double delta, std::ostream& out) {
    ElapsedTimer timer;
    PropertySpec phi = lookup_property(state, property);
    Graph g = parse_edge_list_file(graph_file);
    json result;
    result["query"] = json{{"command", "count"}, {"property", property}, {"k", k},
                           {"graph", graph_file}, {"n", g.vertex_count()},
                           {"m", g.edge_count()}};
    result["mode"] = mode;
    result["seed"] = state.seed;
    result["config_hash"] = config_hash(state);
    if (mode == "brute") {
        result["value"] = count_exact_bruteforce(phi, k, g, state.budgets).str();
        result["citations"] = json::array({"Sec 2.2 (definition)"});
    } else if (mode == "via-subs") {
        result["value"] = count_exact_via_subs(phi, k, g, state.budgets).str();
        result["citations"] = json::array({"Eq. (2)"});
    } else if (mode == "fptras") {
        EstimateResult est = fptras_estimate(phi, k, g, eps, delta, state.seed, state.budgets);
        result["estimate"] = rat_to_string(est.estimate);
        result["samples"] = est.samples.str();
        result["exact_path"] = est.exact_path;
        result["eps"] = eps;
        result["delta"] = delta;
        result["citations"] = json::array({"Algorithm 1", "Lemma 6.6"});
    } else {
        throw usage_error("count: unknown mode \"" + mode + "\"");
    }
    result["elapsed_ms"] = timer.ms();
    emit(out, state, result);
    return 0;
}

int dispatch_coeff(const CliState& state, const std::string& property,
                   const std::string& family, std::optional<long> mod, std::ostream& out) {
    ElapsedTimer timer;
    PropertySpec phi = lookup_property(state, property);
    json result;
    result["query"] = json{{"command", "coeff"}, {"property", property}, {"family", family}};
    result["seed"] = state.seed;
    result["config_hash"] = config_hash(state);
    if (mod) {
        long residue = torus_top_coefficient_mod(phi, *mod, state.budgets);
        Verdict verdict = hardness_criterion(phi, {*mod}, state.budgets);
        result["residue"] = residue;
        result["modulus"] = *mod;
        result["verdict"] = to_string(verdict.tag) +
                            (verdict.tag == ComplexityTag::sharp_w1_hard ? " criterion met" : "");
        result["verdict_detail"] = to_json(verdict);
        result["citations"] = json::array({"Lemma 4.5", "Thm 1.7"});
    } else {
        Graph h = generate_family(parse_family_spec(family));
        CoefficientTable table = coefficient_table(phi, h, state.budgets);
        result["table"] = to_json(table);
        json top;
        top["value"] = top_coefficient(phi, h, state.budgets).str();
        result["top_coefficient"] = top;
        result["citations"] = json::array({"Lemma 3.1", "Cor 3.2"});
    }
    result["elapsed_ms"] = timer.ms();
    emit(out, state, result);
    return 0;
}

int dispatch_tutte(const CliState& state, const std::string& graph_file, int k,
                   const std::string& xs, const std::string& ys, const std::string& mode,
                   bool classify, std::ostream& out) {
    ElapsedTimer timer;
    Graph g = parse_edge_list_file(graph_file);
    RationalPoint p{rat_from_string(xs), rat_from_string(ys)};
    json result;
    result["query"] = json{{"command", "tutte"}, {"graph", graph_file}, {"k", k},
                           {"x", rat_to_string(p.x)}, {"y", rat_to_string(p.y)}};
    result["seed"] = state.seed;
    result["config_hash"] = config_hash(state);
    TutteValue value;
    if (mode == "brute") {
        value = tutte_k_bruteforce(g, k, p, state.budgets);
        result["citations"] = json::array({"Sec 7 (definition)"});
    } else if (mode == "delcon") {
        value = tutte_k_delcon(MultiGraph(g), k, p, state.budgets);
        result["citations"] = json::array({"Lemma 7.2"});
    } else {
        throw usage_error("tutte: unknown mode \"" + mode + "\"");
    }
    result["value"] = rat_to_string(value.value);
    result["provenance"] = value.provenance == TutteMethod::brute    ? "brute"
                           : value.provenance == TutteMethod::delcon ? "delcon"
                                                                     : "closed-form";
    if (auto meaning = point_interpretation(p)) result["interpretation"] = *meaning;
    if (classify) {
        PointClassification pc = classify_point(p);
        result["classification"] =
            json{{"exact", to_json(pc.exact)}, {"approx", to_json(pc.approx)}};
        result["citations"].push_back("Thm 1.9");
        result["citations"].push_back("Thm 1.10");
    }
    result["elapsed_ms"] = timer.ms();
    emit(out, state, result);
    return 0;
}

int dispatch_tutte_map(const CliState& state, long x_min, long x_max, long y_min, long y_max,
                       long den, std::ostream& out) {
    if (den < 1) throw usage_error("tutte-map: denominator must be >= 1");
    if (x_min > x_max || y_min > y_max) throw usage_error("tutte-map: empty range");
    ElapsedTimer timer;
    std::vector<Rat> xs, ys;
    for (long i = x_min * den; i <= x_max * den; ++i) xs.emplace_back(i, den);
    for (long i = y_min * den; i <= y_max * den; ++i) ys.emplace_back(i, den);
    json result;
    result["query"] = json{{"command", "tutte-map"},
                           {"x_range", json::array({x_min, x_max})},
                           {"y_range", json::array({y_min, y_max})},
                           {"denominator", den}};
    result["seed"] = state.seed;
    result["config_hash"] = config_hash(state);
    result["grid"] = classification_grid_json(xs, ys);
    result["citations"] = json::array({"Thm 1.9", "Thm 1.10"});
    result["elapsed_ms"] = timer.ms();
    emit(out, state, result);
    return 0;
}

int dispatch_verify(const CliState& state, const std::string& suite, long ell,
                    std::ostream& out) {
    SuiteOptions opts;
    opts.ell = ell;
    auto checks = run_verify_suite(suite, opts);
    int failures = 0;
    for (const auto& check : checks) {
        out << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
        if (!check.detail.empty()) out << " (" << check.detail << ")";
        out << '\n';
        if (!check.pass) ++failures;
    }
    out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
        << " [" << suite << ", seed " << state.seed << "]" << '\n';
    return failures == 0 ? 0 : 1;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult result;
    std::ostringstream out, err;

    CLI::App app{"exact, approximate and decision counting of k-edge subgraph patterns"};
    app.require_subcommand(1);
    CliState state;

    app.add_option("--format", state.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", state.seed, "RNG seed recorded in every result");
    app.add_option("--properties", state.properties_path,
                   "JSON config with custom minor-free properties "
                   "(or set EDGESUB_PROPERTIES)");
    app.add_option("--budget-fractures", state.budgets.fracture_budget,
                   "cap on enumerated fracture-lattice size");
    app.add_option("--budget-subsets", state.budgets.subset_budget,
                   "cap on brute-force subset enumerations");
    app.add_option("--budget-phi-k", state.budgets.phi_k_cap, "cap on k in Phi_k enumeration");

    auto* count = app.add_subcommand("count", "count k-edge subgraphs satisfying a property");
    count->fallthrough();
    std::string property, graph_file, mode = "brute";
    int k = 0;
    double eps = 0.2, delta = 0.1;
    count->add_option("property", property)->required();
    count->add_option("k", k)->required();
    count->add_option("graph-file", graph_file)->required();
    count->add_option("--mode", mode)->check(CLI::IsMember({"brute", "via-subs", "fptras"}));
    count->add_option("--eps", eps, "relative error (fptras mode)");
    count->add_option("--delta", delta, "failure probability (fptras mode)");

    auto* coeff = app.add_subcommand("coeff", "coefficient table or torus residue");
    coeff->fallthrough();
    std::string coeff_property, family;
    long mod = 0;
    coeff->add_option("property", coeff_property)->required();
    coeff->add_option("family-spec", family)->required();
    coeff->add_option("--mod", mod, "prime modulus for the torus residue");

    auto* tutte = app.add_subcommand("tutte", "evaluate the k-edge Tutte sum");
    tutte->fallthrough();
    std::string tutte_file, xs, ys, tutte_mode = "brute";
    int tutte_k = 0;
    bool classify = false;
    tutte->add_option("graph-file", tutte_file)->required();
    tutte->add_option("k", tutte_k)->required();
    tutte->add_option("x", xs)->required();
    tutte->add_option("y", ys)->required();
    tutte->add_option("--mode", tutte_mode)->check(CLI::IsMember({"brute", "delcon"}));
    tutte->add_flag("--classify", classify, "attach the point classification");

    auto* tutte_map = app.add_subcommand("tutte-map", "classification grid over rational points");
    tutte_map->fallthrough();
    long x_min = -3, x_max = 4, y_min = -3, y_max = 4, den = 1;
    tutte_map->add_option("--x-min", x_min);
    tutte_map->add_option("--x-max", x_max);
    tutte_map->add_option("--y-min", y_min);
    tutte_map->add_option("--y-max", y_max);
    tutte_map->add_option("--den", den, "evaluate at multiples of 1/den");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->fallthrough();
    std::string suite;
    long ell = 3;
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(verify_suite_names()));
    verify->add_option("--ell", ell, "torus side length for fixed-point checks");

    // CLI11 wants argc/argv; rebuild them.
    std::vector<std::string> argv_strings = args;
    argv_strings.insert(argv_strings.begin(), "edgesub");
    std::vector<char*> argv;
    for (auto& s : argv_strings) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        load_properties_config(state);
        if (count->parsed())
            result.exit_code = dispatch_count(state, property, k, graph_file, mode, eps, delta, out);
        else if (coeff->parsed())
            result.exit_code = dispatch_coeff(state, coeff_property, family,
                                              mod > 0 ? std::optional<long>(mod) : std::nullopt, out);
        else if (tutte->parsed())
            result.exit_code =
                dispatch_tutte(state, tutte_file, tutte_k, xs, ys, tutte_mode, classify, out);
        else if (tutte_map->parsed())
            result.exit_code = dispatch_tutte_map(state, x_min, x_max, y_min, y_max, den, out);
        else if (verify->parsed())
            result.exit_code = dispatch_verify(state, suite, ell, out);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        result.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        result.exit_code = 4;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        result.exit_code = 2;
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << '\n';
        result.exit_code = 3;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        result.exit_code = 4;
    } catch (const metadata_error& e) {
        err << "metadata error: " << e.what() << '\n';
        result.exit_code = 4;
    }

    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace edgesub
