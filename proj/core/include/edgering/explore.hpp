#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "edgering/canonical.hpp"
#include "edgering/graph.hpp"
#include "edgering/guards.hpp"

namespace edgering {

// Randomized / exhaustive search for almost Gorenstein edge rings whose
// h-vector is not symmetric away from position 1.
struct ExploreOptions {
    enum class Mode { random, exhaustive };

    Mode mode = Mode::random;
    bool bipartite_only = false;
    int max_vertices = 8;
    int samples = 200;           // random mode only
    std::uint64_t seed = 0;
};

struct ExploreFinding {
    int sample_index = 0;
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<std::int64_t> h_vector;
    int mu = 0;
    std::int64_t e_tilde = 0;
};

struct ExploreStats {
    int examined = 0;
    int normal = 0;
    int almost_gorenstein = 0;
    int violations = 0;
};

struct ExploreResult {
    ExploreOptions options;
    std::vector<ExploreFinding> findings;
    ExploreStats stats;
};

// True when the analysis shows an almost Gorenstein ring whose h-vector
// fails the near-symmetry condition.
bool violates_near_symmetry(const Analysis& analysis);

ExploreResult run_explore(const ExploreOptions& opts,
                          const Guards& guards = default_guards());

// JSON-lines rendering: one line per finding in sample order, then one
// summary line. Byte-stable for a fixed seed and options.
void write_explore_result(std::ostream& out, const ExploreResult& result);

}  // namespace edgering
