#include "edgering/cycles.hpp"

#include <string>

namespace edgering {

std::vector<VertexSet> induced_odd_cycles(const Graph& g, const Guards& guards) {
    const int d = g.vertex_count();
    if (d > guards.max_cone_vertices) {
        throw GuardError("induced-cycle enumeration is guarded at " +
                         std::to_string(guards.max_cone_vertices) +
                         " vertices, got " + std::to_string(d));
    }
    std::vector<VertexSet> cycles;
    std::vector<int> path;

    // Grow induced paths starting at their smallest vertex. A candidate x
    // adjacent to exactly the path's last vertex extends the path; one
    // adjacent to exactly the last and the first vertex closes a chordless
    // cycle. The direction with the smaller second vertex is the one kept.
    auto extend = [&](auto&& self, VertexSet used) -> void {
        const int last = path.back();
        const int first = path[0];
        const VertexSet last_bit = vertex_bit(last);
        const VertexSet close_bits = last_bit | vertex_bit(first);
        for (int x : set_vertices(g.adjacency(last) & ~used)) {
            if (x < first) continue;
            VertexSet touched = g.adjacency(x) & used;
            if (touched == last_bit) {
                path.push_back(x);
                self(self, used | vertex_bit(x));
                path.pop_back();
            } else if (path.size() >= 2 && touched == close_bits) {
                if (path.size() % 2 == 0 && path[1] < x) {  // odd cycle length
                    cycles.push_back(used | vertex_bit(x));
                }
            }
        }
    };

    for (int s = 1; s <= d; ++s) {
        path.assign(1, s);
        extend(extend, vertex_bit(s));
    }
    return cycles;
}

bool odd_cycle_condition(const Graph& g, const Guards& guards) {
    // Whole-graph reading: every two vertex-disjoint odd cycles anywhere in g
    // must be joined by an edge. On connected graphs, where this feeds the
    // normality test, it coincides with the per-component statement.
    std::vector<VertexSet> cycles = induced_odd_cycles(g, guards);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            if (cycles[i] & cycles[j]) continue;
            if ((neighborhood(g, cycles[i]) & cycles[j]) == 0) return false;
        }
    }
    return true;
}

bool is_hamiltonian(const Graph& g, const Guards& guards) {
    if (g.edge_count() > guards.max_search_edges) {
        throw GuardError("Hamilton-cycle search is guarded at " +
                         std::to_string(guards.max_search_edges) +
                         " edges, got " + std::to_string(g.edge_count()));
    }
    const int d = g.vertex_count();
    if (d < 3 || !is_connected(g)) return false;

    // dp[mask] = set of possible endpoints of a path from vertex 1 that
    // covers exactly mask.
    const std::size_t size = std::size_t{1} << d;
    std::vector<std::uint64_t> dp(size, 0);
    dp[vertex_bit(1)] = vertex_bit(1);
    for (VertexSet mask = 1; mask < size; ++mask) {
        std::uint64_t ends = dp[mask];
        if (!ends || !(mask & 1)) continue;
        for (int v : set_vertices(ends)) {
            for (int w : set_vertices(g.adjacency(v) & ~mask)) {
                dp[mask | vertex_bit(w)] |= vertex_bit(w);
            }
        }
    }
    return (dp[g.vertex_set()] & g.adjacency(1)) != 0;
}

}  // namespace edgering
