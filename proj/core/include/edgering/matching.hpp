#pragma once

#include "edgering/graph.hpp"
#include "edgering/guards.hpp"

namespace edgering {

// Exact perfect-matching test, valid for bipartite and non-bipartite graphs
// alike. Guarded by max_cone_vertices.
bool has_perfect_matching(const Graph& g, const Guards& guards = default_guards());

// Connected and every edge lies in some perfect matching.
bool is_matching_covered(const Graph& g, const Guards& guards = default_guards());

}  // namespace edgering
