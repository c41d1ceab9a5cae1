#pragma once

#include <initializer_list>
#include <vector>

#include "edgering/families.hpp"
#include "edgering/graph.hpp"

namespace testutil {

inline edgering::VertexSet vs(std::initializer_list<int> vertices) {
    edgering::VertexSet s = 0;
    for (int v : vertices) s |= edgering::vertex_bit(v);
    return s;
}

inline edgering::Graph path_graph(int n) {
    std::vector<edgering::Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return edgering::Graph(n, std::move(edges));
}

// Two triangles {1,2,3} and {5,6,7} joined by the path 3-4-5; the standard
// witness of a connected graph whose edge ring is not normal.
inline edgering::Graph two_triangles_bridged() {
    return edgering::Graph(7, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}});
}

inline edgering::Graph two_disjoint_triangles() {
    return edgering::Graph(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
}

}  // namespace testutil
