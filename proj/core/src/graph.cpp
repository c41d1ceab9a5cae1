#include "edgering/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <string>

namespace edgering {

std::vector<int> set_vertices(VertexSet s) {
    std::vector<int> out;
    out.reserve(set_size(s));
    while (s) {
        int b = std::countr_zero(s);
        out.push_back(b + 1);
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : d_(vertex_count), edges_(std::move(edges)) {
    if (d_ < 2) {
        throw InvalidInput("graph needs at least 2 vertices, got " +
                           std::to_string(d_));
    }
    if (d_ > kMaxVertices) {
        throw InvalidInput("vertex count " + std::to_string(d_) +
                           " exceeds the supported maximum of " +
                           std::to_string(kMaxVertices));
    }
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(d_ + 1, 0);
    const Edge* prev = nullptr;
    for (const Edge& e : edges_) {
        if (e.u < 1 || e.v > d_) {
            throw InvalidInput("edge {" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + "} out of range [1," +
                               std::to_string(d_) + "]");
        }
        if (e.u == e.v) {
            throw InvalidInput("loop at vertex " + std::to_string(e.u));
        }
        if (prev && *prev == e) {
            throw InvalidInput("duplicate edge {" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + "}");
        }
        prev = &e;
        adj_[e.u] |= vertex_bit(e.v);
        adj_[e.v] |= vertex_bit(e.u);
    }
    for (int v = 1; v <= d_; ++v) {
        if (adj_[v] == 0) {
            throw InvalidInput("isolated vertex " + std::to_string(v));
        }
    }
}

int Graph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

namespace {

bool parse_int(std::string_view token, int& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int header_line = 0;
    int d = -1;
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, int>> edge_lines;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        auto hash = sv.find('#');
        if (hash != std::string_view::npos) sv = sv.substr(0, hash);
        auto tokens = split_ws(sv);
        if (tokens.empty()) continue;

        if (d < 0) {
            if (tokens.size() != 1 || !parse_int(tokens[0], d) || d < 1) {
                throw ParseError(ParseErrorKind::malformed_line, line_no,
                                 "expected a positive vertex count");
            }
            header_line = line_no;
            continue;
        }

        int u = 0, v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
            throw ParseError(ParseErrorKind::malformed_line, line_no,
                             "expected an edge line \"u v\"");
        }
        if (u == v) {
            throw ParseError(ParseErrorKind::loop, line_no,
                             "loop at vertex " + std::to_string(u));
        }
        if (u > v) {
            throw ParseError(ParseErrorKind::malformed_line, line_no,
                             "edge endpoints must satisfy u < v");
        }
        if (u < 1 || v > d) {
            throw ParseError(ParseErrorKind::vertex_out_of_range, line_no,
                             "vertex index outside [1," + std::to_string(d) + "]");
        }
        Edge e{u, v};
        for (const auto& [seen, at] : edge_lines) {
            if (seen == e) {
                throw ParseError(ParseErrorKind::duplicate_edge, line_no,
                                 "duplicate of edge {" + std::to_string(u) + "," +
                                     std::to_string(v) + "} from line " +
                                     std::to_string(at));
            }
        }
        edge_lines.emplace_back(e, line_no);
        edges.push_back(e);
    }

    if (d < 0) {
        throw ParseError(ParseErrorKind::malformed_line, line_no + 1,
                         "missing vertex count");
    }
    if (d > kMaxVertices) {
        throw ParseError(ParseErrorKind::vertex_out_of_range, header_line,
                         "vertex count " + std::to_string(d) +
                             " exceeds the supported maximum of " +
                             std::to_string(kMaxVertices));
    }

    std::vector<bool> covered(d + 1, false);
    for (const Edge& e : edges) covered[e.u] = covered[e.v] = true;
    for (int v = 1; v <= d; ++v) {
        if (!covered[v]) {
            throw ParseError(ParseErrorKind::isolated_vertex, header_line,
                             "vertex " + std::to_string(v) + " is isolated");
        }
    }
    return Graph(d, std::move(edges));
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

namespace {

// Vertices reachable from start using adjacency restricted to `allowed`.
VertexSet reach(const Graph& g, int start, VertexSet allowed) {
    VertexSet seen = vertex_bit(start);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (int v : set_vertices(frontier)) next |= g.adjacency(v);
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet remaining = g.vertex_set();
    while (remaining) {
        int start = std::countr_zero(remaining) + 1;
        VertexSet comp = reach(g, start, remaining);
        comps.push_back(comp);
        remaining &= ~comp;
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return reach(g, 1, g.vertex_set()) == g.vertex_set();
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const int d = g.vertex_count();
    std::vector<int> color(d + 1, -1);
    Bipartition bip;
    for (int start = 1; start <= d; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : set_vertices(g.adjacency(v))) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 1; v <= d; ++v) {
        (color[v] == 0 ? bip.part1 : bip.part2) |= vertex_bit(v);
    }
    return bip;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

int bipartite_component_count(const Graph& g) {
    int count = 0;
    for (VertexSet comp : connected_components(g)) {
        // A component is bipartite iff a 2-coloring of it exists; reuse the
        // whole-graph coloring restricted to the component by constructing
        // the induced subgraph implicitly.
        std::vector<int> verts = set_vertices(comp);
        std::vector<int> color(g.vertex_count() + 1, -1);
        bool ok = true;
        color[verts[0]] = 0;
        std::vector<int> stack{verts[0]};
        while (!stack.empty() && ok) {
            int v = stack.back();
            stack.pop_back();
            for (int w : set_vertices(g.adjacency(v) & comp)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++count;
    }
    return count;
}

std::vector<Block> blocks(const Graph& g) {
    if (!is_connected(g)) {
        throw InvalidInput("blocks: graph must be connected");
    }
    const int d = g.vertex_count();
    std::vector<int> disc(d + 1, 0), low(d + 1, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Edge>> block_edges;
    int timer = 0;

    // Iterative DFS with an explicit frame stack.
    struct Frame {
        int v;
        int parent;
        std::vector<int> nbrs;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({1, 0, set_vertices(g.adjacency(1))});
    disc[1] = low[1] = ++timer;

    auto pop_block = [&](const Edge& until) {
        std::vector<Edge> be;
        while (!edge_stack.empty()) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            be.push_back(e);
            if (e == until) break;
        }
        block_edges.push_back(std::move(be));
    };

    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < f.nbrs.size()) {
            int w = f.nbrs[f.next++];
            if (w == f.parent) {
                f.parent = 0;  // skip the tree edge back once
                continue;
            }
            if (disc[w] == 0) {
                edge_stack.emplace_back(f.v, w);
                disc[w] = low[w] = ++timer;
                stack.push_back({w, f.v, set_vertices(g.adjacency(w))});
            } else if (disc[w] < disc[f.v]) {
                edge_stack.emplace_back(f.v, w);
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            int v = f.v;
            int parent = 0;
            stack.pop_back();
            if (!stack.empty()) {
                parent = stack.back().v;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= disc[parent]) pop_block(Edge(parent, v));
            }
        }
    }

    std::vector<Block> out;
    out.reserve(block_edges.size());
    for (auto& be : block_edges) {
        VertexSet vs = 0;
        for (const Edge& e : be) vs |= vertex_bit(e.u) | vertex_bit(e.v);
        std::vector<int> verts = set_vertices(vs);
        std::vector<int> relabel(g.vertex_count() + 1, 0);
        for (std::size_t i = 0; i < verts.size(); ++i) relabel[verts[i]] = static_cast<int>(i) + 1;
        std::vector<Edge> rel_edges;
        rel_edges.reserve(be.size());
        for (const Edge& e : be) rel_edges.emplace_back(relabel[e.u], relabel[e.v]);
        out.push_back({Graph(static_cast<int>(verts.size()), std::move(rel_edges)),
                       std::move(verts)});
    }
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
        return a.vertices < b.vertices;
    });
    return out;
}

bool is_ordinary(const Graph& g, int v) {
    if (!is_connected(g)) {
        throw InvalidInput("is_ordinary: graph must be connected");
    }
    if (v < 1 || v > g.vertex_count()) {
        throw InvalidInput("is_ordinary: vertex out of range");
    }
    VertexSet rest = g.vertex_set() & ~vertex_bit(v);
    if (rest == 0) return true;
    int start = std::countr_zero(rest) + 1;
    return reach(g, start, rest) == rest;
}

bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (!is_ordinary(g, v)) return false;
    }
    return true;
}

bool is_independent(const Graph& g, VertexSet t) {
    for (int v : set_vertices(t)) {
        if (g.adjacency(v) & t) return false;
    }
    return true;
}

std::vector<VertexSet> independent_sets(const Graph& g, const Guards& guards) {
    const int d = g.vertex_count();
    if (d > guards.max_cone_vertices) {
        throw GuardError("independent-set enumeration is guarded at " +
                         std::to_string(guards.max_cone_vertices) +
                         " vertices, got " + std::to_string(d));
    }
    std::vector<VertexSet> out;
    const VertexSet all = full_vertex_set(d);
    for (VertexSet t = 1; t <= all; ++t) {
        if (is_independent(g, t)) out.push_back(t);
    }
    return out;
}

VertexSet neighborhood(const Graph& g, VertexSet t) {
    VertexSet n = 0;
    for (int v : set_vertices(t)) n |= g.adjacency(v);
    return n;
}

Subgraph bridge_graph(const Graph& g, VertexSet t) {
    if (t == 0) throw InvalidInput("bridge_graph: empty set");
    if (!is_independent(g, t)) {
        throw InvalidInput("bridge_graph: set is not independent");
    }
    VertexSet n = neighborhood(g, t);
    Subgraph b;
    b.vertices = t | n;
    for (const Edge& e : g.edges()) {
        if ((set_contains(t, e.u) && set_contains(n, e.v)) ||
            (set_contains(t, e.v) && set_contains(n, e.u))) {
            b.edges.push_back(e);
        }
    }
    return b;
}

bool subgraph_connected(VertexSet vertices, const std::vector<Edge>& edges) {
    if (vertices == 0) return false;
    if (set_size(vertices) == 1) return true;
    std::vector<VertexSet> adj(kMaxVertices + 1, 0);
    for (const Edge& e : edges) {
        adj[e.u] |= vertex_bit(e.v);
        adj[e.v] |= vertex_bit(e.u);
    }
    int start = std::countr_zero(vertices) + 1;
    VertexSet seen = vertex_bit(start);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (int v : set_vertices(frontier)) next |= adj[v];
        next &= vertices & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == vertices;
}

bool is_acceptable(const Graph& g, const Bipartition& p, VertexSet t) {
    if (t == 0) throw InvalidInput("is_acceptable: empty set");
    VertexSet side = (t & p.part1) ? p.part1 : p.part2;
    if ((t & ~side) != 0) {
        throw InvalidInput("is_acceptable: set must lie within one part");
    }
    Subgraph b = bridge_graph(g, t);
    if (!subgraph_connected(b.vertices, b.edges)) return false;

    VertexSet rest = g.vertex_set() & ~b.vertices;
    if (rest == 0) return false;
    std::vector<Edge> rest_edges;
    for (const Edge& e : g.edges()) {
        if (set_contains(rest, e.u) && set_contains(rest, e.v)) {
            rest_edges.push_back(e);
        }
    }
    if (rest_edges.empty()) return false;
    return subgraph_connected(rest, rest_edges);
}

bool is_regular(const Graph& g) {
    int k = g.degree(1);
    for (int v = 2; v <= g.vertex_count(); ++v) {
        if (g.degree(v) != k) return false;
    }
    return true;
}

}  // namespace edgering
