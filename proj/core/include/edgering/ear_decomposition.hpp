#pragma once

#include "edgering/graph.hpp"
#include "edgering/guards.hpp"

namespace edgering {

// Exact minimum number of even-length ears over all open ear decompositions
// of a 2-connected graph; the initial cycle counts as an even ear iff its
// length is even. Exhaustive search over edge subsets, guarded by
// max_search_edges.
int phi_bruteforce(const Graph& g, const Guards& guards = default_guards());

// The same invariant for a 2-connected bipartite graph, computed from the
// minimal dilation ell of its edge polytope as 2*ell - |V| + 1. Aborts with
// InternalError if the result is not a positive integer.
int phi_bipartite(const Graph& g, int ell);

}  // namespace edgering
