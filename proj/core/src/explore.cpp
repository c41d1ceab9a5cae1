#include "edgering/explore.hpp"

#include <nlohmann/json.hpp>
#include <ostream>

#include "edgering/generate.hpp"

namespace edgering {

bool violates_near_symmetry(const Analysis& analysis) {
    if (!analysis.normal) return false;
    if (!analysis.classification.almost_gorenstein.value_or(false)) return false;
    return !analysis.classification.condition_star.value_or(true);
}

ExploreResult run_explore(const ExploreOptions& opts, const Guards& guards) {
    if (opts.max_vertices < 2) {
        throw InvalidInput("explore: max_vertices must be at least 2");
    }
    ExploreResult result;
    result.options = opts;

    AnalysisOptions aopts;
    aopts.with_hamiltonian = false;
    aopts.nonnormal_numerator = false;  // non-normal samples carry no classification

    auto examine = [&](int index, const Graph& g) {
        ++result.stats.examined;
        Analysis a = analyze(g, aopts, guards);
        if (!a.normal) return;
        ++result.stats.normal;
        if (a.classification.almost_gorenstein.value_or(false)) {
            ++result.stats.almost_gorenstein;
            if (violates_near_symmetry(a)) {
                ++result.stats.violations;
                ExploreFinding f;
                f.sample_index = index;
                f.vertex_count = g.vertex_count();
                f.edges = g.edges();
                f.h_vector = a.hilbert->h_vector;
                f.mu = a.canonical->mu;
                f.e_tilde = a.canonical->e_tilde;
                result.findings.push_back(std::move(f));
            }
        }
    };

    if (opts.mode == ExploreOptions::Mode::exhaustive) {
        std::vector<Graph> graphs = opts.bipartite_only
                                        ? connected_bipartite_graphs_up_to(opts.max_vertices)
                                        : connected_graphs_up_to(opts.max_vertices);
        int index = 0;
        for (const Graph& g : graphs) examine(index++, g);
    } else {
        if (opts.samples < 0) throw InvalidInput("explore: negative sample count");
        PortableRng rng(opts.seed);
        RandomGraphOptions ropts;
        ropts.min_vertices = 4;
        ropts.max_vertices = opts.max_vertices;
        ropts.bipartite = opts.bipartite_only;
        for (int i = 0; i < opts.samples; ++i) {
            examine(i, random_connected_graph(rng, ropts));
        }
    }
    return result;
}

void write_explore_result(std::ostream& out, const ExploreResult& result) {
    using json = nlohmann::ordered_json;
    for (const ExploreFinding& f : result.findings) {
        json edges = json::array();
        for (const Edge& e : f.edges) edges.push_back({e.u, e.v});
        json line = {
            {"sample", f.sample_index},
            {"vertices", f.vertex_count},
            {"edges", std::move(edges)},
            {"h_vector", f.h_vector},
            {"mu", f.mu},
            {"e_tilde", f.e_tilde},
        };
        out << line.dump() << '\n';
    }
    const ExploreOptions& o = result.options;
    json summary = {
        {"summary",
         {{"mode", o.mode == ExploreOptions::Mode::random ? "random" : "exhaustive"},
          {"bipartite_only", o.bipartite_only},
          {"max_vertices", o.max_vertices},
          {"samples", o.mode == ExploreOptions::Mode::random ? json(o.samples) : json()},
          {"seed", o.mode == ExploreOptions::Mode::random ? json(o.seed) : json()},
          {"examined", result.stats.examined},
          {"normal", result.stats.normal},
          {"almost_gorenstein", result.stats.almost_gorenstein},
          {"violations", result.stats.violations}}},
    };
    out << summary.dump() << '\n';
}

}  // namespace edgering
