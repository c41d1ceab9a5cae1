#pragma once

#include <vector>

#include "edgering/graph.hpp"
#include "edgering/guards.hpp"

namespace edgering {

// Vertex sets of all induced (chordless) odd cycles.
std::vector<VertexSet> induced_odd_cycles(const Graph& g,
                                          const Guards& guards = default_guards());

// True iff within every connected component, every pair of vertex-disjoint
// odd cycles is joined by an edge. Checked over induced odd cycles only,
// which is equivalent: every odd cycle contains an induced odd cycle on a
// subset of its vertices.
bool odd_cycle_condition(const Graph& g, const Guards& guards = default_guards());

// Exact Hamilton-cycle search; guarded by max_search_edges.
bool is_hamiltonian(const Graph& g, const Guards& guards = default_guards());

}  // namespace edgering
