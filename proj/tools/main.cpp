// Command-line front end: analyze graph files or named families, emit JSON
// reports, and run the randomized explorer.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "edgering/explore.hpp"
#include "edgering/families.hpp"
#include "edgering/report.hpp"

namespace {

using edgering::FamilySpec;
using edgering::Graph;
using edgering::Guards;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitGuard = 2;
constexpr int kExitInternal = 3;

struct AnalyzeArgs {
    std::string path;
    std::string family;
    std::vector<int> params;
    bool pretty = false;
    bool json_out = false;
    bool oracle = false;
    int max_dilate = 0;
};

struct ExploreArgs {
    bool bipartite = false;
    int max_vertices = 8;
    int samples = 200;
    std::uint64_t seed = 0;
    std::string mode = "random";
};

Guards guards_with_overrides(const AnalyzeArgs& args) {
    Guards g = edgering::default_guards();
    if (args.max_dilate > 0) g.max_dilate = args.max_dilate;
    return g;
}

Graph load_graph(const AnalyzeArgs& args, std::optional<FamilySpec>& family_out) {
    if (!args.family.empty()) {
        FamilySpec spec = FamilySpec::from_cli(args.family, args.params);
        family_out = spec;
        return edgering::build_family(spec);
    }
    std::ifstream in(args.path);
    if (!in) {
        throw edgering::InvalidInput("cannot open \"" + args.path + "\"");
    }
    return edgering::parse_graph(in);
}

int run_analysis(const AnalyzeArgs& args) {
    std::optional<FamilySpec> family;
    Graph g = load_graph(args, family);
    Guards guards = guards_with_overrides(args);

    edgering::ReportOptions ropts;
    ropts.family_echo = family;
    edgering::Report report = edgering::build_report(g, ropts, guards);

    json out = edgering::report_to_json(report);
    if (args.oracle) {
        if (!family) {
            throw edgering::InvalidInput("--oracle requires a family");
        }
        auto formula = edgering::h_formula_for(*family);
        if (!formula) {
            throw edgering::InvalidInput("no closed-form h-polynomial for family \"" +
                                         family->token() + "\"");
        }
        bool match = report.hilbert && report.hilbert->h_vector == *formula;
        out["oracle"] = {{"h_formula", *formula}, {"match", match}};
    }

    if (args.pretty) {
        std::cout << edgering::report_pretty(report);
        if (args.oracle) {
            std::cout << "oracle match        "
                      << (out["oracle"]["match"].get<bool>() ? "yes" : "no") << "\n";
        }
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

int run_explore_cmd(const ExploreArgs& args) {
    edgering::ExploreOptions opts;
    opts.bipartite_only = args.bipartite;
    opts.max_vertices = args.max_vertices;
    opts.samples = args.samples;
    opts.seed = args.seed;
    if (args.mode == "random") {
        opts.mode = edgering::ExploreOptions::Mode::random;
    } else if (args.mode == "exhaustive") {
        opts.mode = edgering::ExploreOptions::Mode::exhaustive;
    } else {
        throw edgering::InvalidInput("mode must be \"random\" or \"exhaustive\"");
    }
    edgering::ExploreResult result = edgering::run_explore(opts);
    edgering::write_explore_result(std::cout, result);
    return kExitOk;
}

void print_error(const char* type, const std::exception& e) {
    json err = {{"error", {{"type", type}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge-ring invariants of finite simple graphs"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "Analyze a graph file");
    analyze->add_option("file", analyze_args.path, "graph file");
    analyze->add_option("--family", analyze_args.family, "analyze a named family instead");
    analyze->add_option("--params", analyze_args.params, "family parameters");
    analyze->add_flag("--pretty", analyze_args.pretty, "human-readable table");
    analyze->add_flag("--json", analyze_args.json_out, "JSON output (default)");
    analyze->add_option("--max-dilate", analyze_args.max_dilate, "raise the dilation guard");

    AnalyzeArgs family_args;
    CLI::App* family = app.add_subcommand("family", "Analyze a named graph family");
    family->add_option("name", family_args.family, "family name")->required();
    family->add_option("params", family_args.params, "family parameters");
    family->add_flag("--oracle", family_args.oracle,
                     "also evaluate the closed-form h-polynomial and compare");
    family->add_flag("--pretty", family_args.pretty, "human-readable table");
    family->add_flag("--json", family_args.json_out, "JSON output (default)");
    family->add_option("--max-dilate", family_args.max_dilate, "raise the dilation guard");

    ExploreArgs explore_args;
    CLI::App* explore = app.add_subcommand("explore", "Search for near-symmetry violations");
    explore->add_flag("--bipartite", explore_args.bipartite, "bipartite graphs only");
    explore->add_option("--max-vertices", explore_args.max_vertices, "vertex bound");
    explore->add_option("--samples", explore_args.samples, "random sample count");
    explore->add_option("--seed", explore_args.seed, "random seed");
    explore->add_option("--mode", explore_args.mode, "random | exhaustive");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            if (analyze_args.pretty && analyze_args.json_out) {
                throw edgering::InvalidInput("--pretty and --json are exclusive");
            }
            if (analyze_args.path.empty() == analyze_args.family.empty()) {
                throw edgering::InvalidInput(
                    "analyze needs exactly one of a file or --family");
            }
            return run_analysis(analyze_args);
        }
        if (family->parsed()) {
            if (family_args.pretty && family_args.json_out) {
                throw edgering::InvalidInput("--pretty and --json are exclusive");
            }
            return run_analysis(family_args);
        }
        if (explore->parsed()) {
            return run_explore_cmd(explore_args);
        }
    } catch (const edgering::GuardError& e) {
        print_error("guard", e);
        return kExitGuard;
    } catch (const edgering::InternalError& e) {
        print_error("internal", e);
        return kExitInternal;
    } catch (const edgering::InvalidInput& e) {
        print_error("input", e);
        return kExitInput;
    } catch (const std::exception& e) {
        print_error("input", e);
        return kExitInput;
    }
    return kExitOk;
}
