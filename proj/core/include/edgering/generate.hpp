#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/guards.hpp"

namespace edgering {

// Deterministic random source: the standard 64-bit Mersenne Twister
// (mt19937_64, whose output sequence the C++ standard pins down) with
// rejection sampling for bounded draws, so every stream is reproducible
// across platforms and compilers.
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, n).
    std::uint64_t below(std::uint64_t n);

    // Uniform on [lo, hi] inclusive.
    int int_in(int lo, int hi);

private:
    std::mt19937_64 engine_;
};

// All connected graphs on 2..max_vertices vertices, one per isomorphism
// class. Exhaustive and exact; max_vertices <= 8.
std::vector<Graph> connected_graphs_up_to(int max_vertices);

// The connected bipartite subset, generated independently through canonical
// biadjacency matrices; max_vertices <= 8.
std::vector<Graph> connected_bipartite_graphs_up_to(int max_vertices);

struct RandomGraphOptions {
    int min_vertices = 4;
    int max_vertices = 8;
    bool bipartite = false;
    int max_attempts = 50000;
};

// Random connected graph: vertex count uniform in range, edges kept with
// probability drawn uniformly from {0.3, 0.5, 0.7}, disconnected samples
// rejected. Bipartite mode splits the vertices into two non-empty parts
// uniformly and samples only crossing edges.
Graph random_connected_graph(PortableRng& rng, const RandomGraphOptions& opts);

// Random simple connected k-regular graph on n vertices via the pairing
// model with rejection; empty when no simple pairing was found within the
// attempt budget (or when nk is odd / k >= n).
std::optional<Graph> random_regular_graph(PortableRng& rng, int n, int k,
                                          int attempts = 2000);

}  // namespace edgering
