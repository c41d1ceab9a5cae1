#pragma once

#include <cstdint>

namespace edgering {

// Size guards for the exponential-cost operations. Exceeding a guard is an
// error (GuardError), never a silent truncation. The environment variables
// EDGERING_MAX_CONE_VERTICES, EDGERING_MAX_SEARCH_EDGES, EDGERING_MAX_DILATE
// and EDGERING_MAX_LEVEL_POINTS override the defaults process-wide.
struct Guards {
    // Independent-set enumeration, cone construction, lattice enumeration
    // and the exact matching table are allowed up to this many vertices.
    int max_cone_vertices = 16;

    // Ear-decomposition search and Hamiltonicity search are allowed up to
    // this many edges.
    int max_search_edges = 16;

    // Largest dilation factor accepted by the enumeration operations.
    int max_dilate = 64;

    // Abort if a single enumerated degree level would exceed this many
    // lattice points.
    std::int64_t max_level_points = 4'000'000;

    static Guards from_environment();
};

// Guards read from the environment once at first use.
const Guards& default_guards();

}  // namespace edgering
