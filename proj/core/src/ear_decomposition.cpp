#include "edgering/ear_decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace edgering {

namespace {

using EdgeMask = std::uint32_t;

constexpr signed char kUnreached = 127;

struct SearchContext {
    const Graph* g = nullptr;
    std::vector<signed char> dp;            // edge mask -> min even ears
    std::vector<VertexSet> edge_bits;       // per-edge endpoint pair as set
};

EdgeMask edge_bit(const Graph& g, int u, int v) {
    return EdgeMask{1} << g.edge_index(Edge(u, v));
}

// All simple cycles, reported as (edge mask, length). Each cycle is found
// once: its smallest vertex starts the path and the direction with the
// smaller second vertex is kept.
void enumerate_cycles(const Graph& g,
                      std::vector<std::pair<EdgeMask, int>>& cycles) {
    const int d = g.vertex_count();
    std::vector<int> path;
    for (int s = 1; s <= d; ++s) {
        VertexSet allowed = ~(full_vertex_set(s)) & g.vertex_set();  // vertices > s
        path.assign(1, s);
        VertexSet used = vertex_bit(s);
        EdgeMask mask = 0;

        // Depth-first over paths s, v1, ..., vt with all vi > s.
        struct Frame {
            std::vector<int> nbrs;
            std::size_t next = 0;
        };
        std::vector<Frame> stack;
        stack.push_back({set_vertices(g.adjacency(s) & allowed)});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next >= f.nbrs.size()) {
                stack.pop_back();
                if (path.size() > 1) {
                    int last = path.back();
                    path.pop_back();
                    used &= ~vertex_bit(last);
                    mask &= ~edge_bit(g, path.back(), last);
                }
                continue;
            }
            int w = f.nbrs[f.next++];
            if (set_contains(used, w)) continue;
            path.push_back(w);
            used |= vertex_bit(w);
            mask |= edge_bit(g, path[path.size() - 2], w);
            if (path.size() >= 3 && g.has_edge(w, s) && path[1] < w) {
                cycles.emplace_back(mask | edge_bit(g, w, s),
                                    static_cast<int>(path.size()));
            }
            stack.push_back({set_vertices(g.adjacency(w) & allowed)});
        }
    }
}

// Relax dp over every open ear attachable to the covered subgraph `state`.
void relax_ears(SearchContext& ctx, EdgeMask state) {
    const Graph& g = *ctx.g;
    const signed char base = ctx.dp[state];
    VertexSet covered = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (state & (EdgeMask{1} << i)) covered |= ctx.edge_bits[i];
    }

    auto relax = [&](EdgeMask ear, int length) {
        int cost = base + (length % 2 == 0 ? 1 : 0);
        signed char& slot = ctx.dp[state | ear];
        if (cost < slot) slot = static_cast<signed char>(cost);
    };

    for (int u : set_vertices(covered)) {
        // Length-1 ears: chords between covered vertices.
        for (int w : set_vertices(g.adjacency(u) & covered)) {
            if (w <= u) continue;
            EdgeMask bit = edge_bit(g, u, w);
            if (!(state & bit)) relax(bit, 1);
        }
        // Longer ears: paths through new vertices, ending at a covered
        // vertex w > u (the reverse direction is found from w).
        struct Frame {
            int vertex;
            std::vector<int> nbrs;
            std::size_t next = 0;
        };
        std::vector<Frame> stack;
        std::vector<int> path{u};
        VertexSet used = 0;
        EdgeMask mask = 0;
        stack.push_back({u, set_vertices(g.adjacency(u) & ~covered)});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next >= f.nbrs.size()) {
                stack.pop_back();
                if (path.size() > 1) {
                    int last = path.back();
                    path.pop_back();
                    used &= ~vertex_bit(last);
                    mask &= ~edge_bit(g, path.back(), last);
                }
                continue;
            }
            int x = f.nbrs[f.next++];
            if (set_contains(used, x)) continue;
            path.push_back(x);
            used |= vertex_bit(x);
            mask |= edge_bit(g, path[path.size() - 2], x);
            for (int w : set_vertices(g.adjacency(x) & covered)) {
                if (w > u) relax(mask | edge_bit(g, x, w),
                                 static_cast<int>(path.size()));
            }
            stack.push_back({x, set_vertices(g.adjacency(x) & ~covered & ~used)});
        }
    }
}

}  // namespace

int phi_bruteforce(const Graph& g, const Guards& guards) {
    if (g.edge_count() > guards.max_search_edges) {
        throw GuardError("ear-decomposition search is guarded at " +
                         std::to_string(guards.max_search_edges) +
                         " edges, got " + std::to_string(g.edge_count()));
    }
    if (!is_two_connected(g)) {
        throw InvalidInput("phi_bruteforce: graph must be 2-connected");
    }

    SearchContext ctx;
    ctx.g = &g;
    ctx.dp.assign(std::size_t{1} << g.edge_count(), kUnreached);
    ctx.edge_bits.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        ctx.edge_bits.push_back(vertex_bit(e.u) | vertex_bit(e.v));
    }

    std::vector<std::pair<EdgeMask, int>> cycles;
    enumerate_cycles(g, cycles);
    for (const auto& [mask, length] : cycles) {
        signed char cost = length % 2 == 0 ? 1 : 0;
        if (cost < ctx.dp[mask]) ctx.dp[mask] = cost;
    }

    const EdgeMask full = (EdgeMask{1} << g.edge_count()) - 1;
    // Adding an ear strictly increases the mask value, so one ascending
    // sweep visits states in a valid order.
    for (EdgeMask state = 0; state < full; ++state) {
        if (ctx.dp[state] == kUnreached) continue;
        relax_ears(ctx, state);
    }
    if (ctx.dp[full] == kUnreached) {
        throw InternalError("phi_bruteforce: no ear decomposition found for a "
                            "2-connected graph");
    }
    return ctx.dp[full];
}

int phi_bipartite(const Graph& g, int ell) {
    if (!is_two_connected(g) || !is_bipartite(g)) {
        throw InvalidInput("phi_bipartite: graph must be 2-connected bipartite");
    }
    int phi = 2 * ell - g.vertex_count() + 1;
    if (phi < 1) {
        throw InternalError("phi_bipartite: 2*ell - |V| + 1 = " +
                            std::to_string(phi) + " is not a positive integer");
    }
    return phi;
}

}  // namespace edgering
