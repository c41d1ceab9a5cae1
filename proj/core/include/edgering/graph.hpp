#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "edgering/errors.hpp"
#include "edgering/guards.hpp"

namespace edgering {

// Vertex subsets as bitmasks; bit (v-1) stands for vertex v. Vertices are
// 1-based throughout the library.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }

constexpr bool set_contains(VertexSet s, int v) { return (s >> (v - 1)) & 1; }

constexpr VertexSet full_vertex_set(int d) {
    return d == 64 ? ~VertexSet{0} : (VertexSet{1} << d) - 1;
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }

// Ascending list of the vertices in a set.
std::vector<int> set_vertices(VertexSet s);

// Undirected edge with endpoints normalized to u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A finite simple graph with no isolated vertices. Immutable after
// construction; all operations on it are pure functions.
class Graph {
public:
    // Validates all invariants: 2 <= d <= 64, endpoints in range, no loops,
    // no duplicate edges, every vertex covered by some edge.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return d_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    // Neighbors of v as a set.
    VertexSet adjacency(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return set_contains(adj_[u], v); }
    int degree(int v) const { return set_size(adj_[v]); }

    VertexSet vertex_set() const { return full_vertex_set(d_); }

    // Position of an edge in edges(), or -1.
    int edge_index(const Edge& e) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int d_;
    std::vector<Edge> edges_;        // sorted ascending
    std::vector<VertexSet> adj_;     // index 0 unused
};

// Two-coloring of a bipartite graph. The side containing the smallest vertex
// of each connected component goes to part1.
struct Bipartition {
    VertexSet part1 = 0;
    VertexSet part2 = 0;
};

// A subgraph given by its vertex set and edge list, in the labels of the
// parent graph.
struct Subgraph {
    VertexSet vertices = 0;
    std::vector<Edge> edges;

    friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

// A block of a graph, relabeled to its own compact vertex range.
// vertices[i] is the parent label of block vertex i+1.
struct Block {
    Graph graph;
    std::vector<int> vertices;
};

// Reads the text format: '#' comment lines, a vertex-count line, then one
// "u v" line per edge with 1 <= u < v <= d. Throws ParseError.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Present iff no component contains an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Number of bipartite connected components.
int bipartite_component_count(const Graph& g);

// Biconnected components of a connected graph, ordered by smallest parent
// vertex. Their edge sets partition the edge set of g.
std::vector<Block> blocks(const Graph& g);

// True iff deleting v from the connected graph g leaves a connected graph
// (a single remaining vertex counts as connected).
bool is_ordinary(const Graph& g, int v);

// Connected, at least 3 vertices, and no cut vertex.
bool is_two_connected(const Graph& g);

bool is_independent(const Graph& g, VertexSet t);

// All non-empty independent sets, in increasing bitmask order.
std::vector<VertexSet> independent_sets(const Graph& g,
                                        const Guards& guards = default_guards());

// N_G(T): vertices adjacent to something in t.
VertexSet neighborhood(const Graph& g, VertexSet t);

// The bipartite subgraph B(T) on T and N_G(T) whose edges join T to N_G(T).
// Requires t non-empty and independent.
Subgraph bridge_graph(const Graph& g, VertexSet t);

// For connected bipartite g with bipartition p and non-empty t inside part1
// (or part2): true iff B(T) is connected and g minus the vertices of B(T)
// is connected with at least one edge.
bool is_acceptable(const Graph& g, const Bipartition& p, VertexSet t);

bool is_regular(const Graph& g);

// Connectivity of a subgraph spanned by the given vertices and edges.
bool subgraph_connected(VertexSet vertices, const std::vector<Edge>& edges);

}  // namespace edgering
