#include <doctest.h>

#include <algorithm>
#include <set>

#include "edgering/cycles.hpp"
#include "edgering/generate.hpp"
#include "edgering/graph.hpp"
#include "test_util.hpp"

using namespace edgering;
using testutil::vs;

TEST_CASE("parse: C4 round trip") {
    Graph g = parse_graph("4\n1 2\n2 3\n3 4\n1 4\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(1, 4));
    CHECK_FALSE(g.has_edge(1, 3));
}

TEST_CASE("parse: comments and blank lines") {
    Graph g = parse_graph("# a comment\n\n3\n1 2 # trailing\n2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("parse: distinct errors name the offending line") {
    CHECK_THROWS_WITH_AS(parse_graph("3\n1 1\n"), "line 2: loop at vertex 1", ParseError);
    try {
        parse_graph("2\n1 2\n1 2\n");
        FAIL("expected duplicate-edge error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::duplicate_edge);
        CHECK(e.line() == 3);
    }
    try {
        parse_graph("2\n1 3\n");
        FAIL("expected range error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::vertex_out_of_range);
        CHECK(e.line() == 2);
    }
    try {
        parse_graph("3\n1 2\n");
        FAIL("expected isolated-vertex error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::isolated_vertex);
    }
    try {
        parse_graph("4\nnope\n");
        FAIL("expected malformed-line error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::malformed_line);
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_graph("2\n2 1\n"), ParseError);  // u < v required
    CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("connected components") {
    CHECK(connected_components(cycle_graph(4)).size() == 1);
    CHECK(connected_components(testutil::two_disjoint_triangles()).size() == 2);
    CHECK(connected_components(testutil::path_graph(3)).size() == 1);
    auto comps = connected_components(testutil::two_disjoint_triangles());
    CHECK(comps[0] == vs({1, 2, 3}));
    CHECK(comps[1] == vs({4, 5, 6}));
}

TEST_CASE("bipartition") {
    auto b = bipartition(cycle_graph(4));
    REQUIRE(b.has_value());
    CHECK(b->part1 == vs({1, 3}));
    CHECK(b->part2 == vs({2, 4}));

    CHECK_FALSE(bipartition(complete_graph(5)).has_value());

    auto k33 = bipartition(complete_bipartite_graph(3, 3));
    REQUIRE(k33.has_value());
    CHECK(k33->part1 == vs({1, 2, 3}));
    CHECK(k33->part2 == vs({4, 5, 6}));
}

TEST_CASE("bipartite component count") {
    CHECK(bipartite_component_count(cycle_graph(4)) == 1);
    CHECK(bipartite_component_count(complete_graph(5)) == 0);
    CHECK(bipartite_component_count(testutil::two_disjoint_triangles()) == 0);
    Graph mixed(5, {{1, 2}, {3, 4}, {4, 5}, {3, 5}});  // edge + triangle
    CHECK(bipartite_component_count(mixed) == 1);
}

TEST_CASE("blocks of a path") {
    auto bs = blocks(testutil::path_graph(3));
    REQUIRE(bs.size() == 2);
    CHECK(bs[0].vertices == std::vector<int>{1, 2});
    CHECK(bs[1].vertices == std::vector<int>{2, 3});
}

TEST_CASE("blocks: cycle is a single block") {
    auto bs = blocks(cycle_graph(4));
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].graph.edge_count() == 4);
}

TEST_CASE("blocks: two triangles sharing a vertex") {
    Graph g(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
    auto bs = blocks(g);
    REQUIRE(bs.size() == 2);
    for (const Block& b : bs) {
        CHECK(b.graph.vertex_count() == 3);
        CHECK(b.graph.edge_count() == 3);
    }
}

TEST_CASE("blocks reject disconnected input") {
    CHECK_THROWS_AS(blocks(testutil::two_disjoint_triangles()), InvalidInput);
}

TEST_CASE("blocks partition the edge set") {
    PortableRng rng(7);
    RandomGraphOptions opts;
    opts.min_vertices = 4;
    opts.max_vertices = 9;
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(rng, opts);
        auto bs = blocks(g);
        std::multiset<std::pair<int, int>> covered;
        for (const Block& b : bs) {
            for (const Edge& e : b.graph.edges()) {
                covered.insert({b.vertices[e.u - 1], b.vertices[e.v - 1]});
            }
            bool single_edge = b.graph.edge_count() == 1;
            CHECK((single_edge || is_two_connected(b.graph)));
        }
        CHECK(covered.size() == static_cast<std::size_t>(g.edge_count()));
        for (const Edge& e : g.edges()) {
            CHECK(covered.count({std::min(e.u, e.v), std::max(e.u, e.v)}) == 1);
        }
    }
}

TEST_CASE("blocks agree with the common-cycle relation") {
    // Oracle: two distinct edges share a block iff some simple cycle
    // contains both.
    auto on_common_cycle = [](const Graph& g, const Edge& a, const Edge& b) {
        // Walk simple paths from a.u to a.v avoiding edge a; the pair lies
        // on a common cycle iff such a path passes through edge b.
        bool found = false;
        auto dfs = [&](auto&& self, int at, VertexSet used, bool via_b) -> void {
            if (found) return;
            if (at == a.v) {
                if (via_b) found = true;
                return;
            }
            for (int nxt : set_vertices(g.adjacency(at) & ~used)) {
                Edge step(at, nxt);
                if (step == a) continue;
                self(self, nxt, used | vertex_bit(nxt), via_b || step == b);
            }
        };
        dfs(dfs, a.u, vertex_bit(a.u), false);
        return found;
    };

    PortableRng rng(13);
    RandomGraphOptions opts;
    opts.min_vertices = 4;
    opts.max_vertices = 7;
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_connected_graph(rng, opts);
        auto bs = blocks(g);
        auto block_of = [&](const Edge& e) -> int {
            for (std::size_t i = 0; i < bs.size(); ++i) {
                for (const Edge& be : bs[i].graph.edges()) {
                    if (Edge(bs[i].vertices[be.u - 1], bs[i].vertices[be.v - 1]) == e) {
                        return static_cast<int>(i);
                    }
                }
            }
            return -1;
        };
        for (const Edge& a : g.edges()) {
            for (const Edge& b : g.edges()) {
                if (a == b) continue;
                CHECK((block_of(a) == block_of(b)) == on_common_cycle(g, a, b));
            }
        }
    }
}

TEST_CASE("ordinary vertices") {
    CHECK_FALSE(is_ordinary(testutil::path_graph(3), 2));
    CHECK(is_ordinary(cycle_graph(4), 1));
    for (int v = 1; v <= 5; ++v) CHECK(is_ordinary(complete_graph(5), v));
    CHECK(is_ordinary(testutil::path_graph(2), 1));  // one vertex remains
}

TEST_CASE("two-connectedness") {
    CHECK(is_two_connected(cycle_graph(4)));
    CHECK_FALSE(is_two_connected(testutil::path_graph(3)));
    CHECK_FALSE(is_two_connected(testutil::path_graph(2)));  // needs >= 3 vertices
    CHECK(is_two_connected(petersen_graph()));
}

TEST_CASE("independent sets of small graphs") {
    auto k3 = independent_sets(complete_graph(3));
    CHECK(k3 == std::vector<VertexSet>{vs({1}), vs({2}), vs({3})});

    auto c4 = independent_sets(cycle_graph(4));
    CHECK(c4.size() == 6);
    CHECK(std::find(c4.begin(), c4.end(), vs({1, 3})) != c4.end());
    CHECK(std::find(c4.begin(), c4.end(), vs({2, 4})) != c4.end());
}

TEST_CASE("independent sets of K33 against a direct sweep") {
    Graph g = complete_bipartite_graph(3, 3);
    // Oracle: check every non-empty subset directly against the edge list.
    int count = 0;
    for (VertexSet t = 1; t < 64; ++t) {
        bool ok = true;
        for (const Edge& e : g.edges()) {
            if (set_contains(t, e.u) && set_contains(t, e.v)) ok = false;
        }
        if (ok) ++count;
    }
    CHECK(count == 14);
    CHECK(independent_sets(g).size() == 14);
}

TEST_CASE("independent set enumeration is guarded") {
    Guards tight;
    tight.max_cone_vertices = 4;
    CHECK_THROWS_AS(independent_sets(complete_graph(5), tight), GuardError);
}

TEST_CASE("neighborhoods") {
    CHECK(neighborhood(cycle_graph(4), vs({1})) == vs({2, 4}));
    CHECK(neighborhood(complete_bipartite_graph(3, 3), vs({1, 2})) == vs({4, 5, 6}));
    CHECK(neighborhood(gmnr_graph(3, 3, 1), vs({1})) == vs({5, 6}));
}

TEST_CASE("bridge graphs") {
    Graph c4 = cycle_graph(4);
    Subgraph b = bridge_graph(c4, vs({1, 3}));
    CHECK(b.vertices == c4.vertex_set());
    CHECK(b.edges == c4.edges());

    Subgraph star = bridge_graph(complete_graph(5), vs({1}));
    CHECK(star.vertices == vs({1, 2, 3, 4, 5}));
    CHECK(star.edges.size() == 4);

    Subgraph pstar = bridge_graph(petersen_graph(), vs({1}));
    CHECK(pstar.edges.size() == 3);

    CHECK_THROWS_AS(bridge_graph(c4, vs({1, 2})), InvalidInput);
    CHECK_THROWS_AS(bridge_graph(c4, 0), InvalidInput);
}

TEST_CASE("bridge graph invariants on random graphs") {
    PortableRng rng(11);
    RandomGraphOptions opts;
    opts.min_vertices = 4;
    opts.max_vertices = 8;
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_connected_graph(rng, opts);
        for (VertexSet t : independent_sets(g)) {
            VertexSet n = neighborhood(g, t);
            CHECK((t & n) == 0);
            Subgraph b = bridge_graph(g, t);
            for (const Edge& e : b.edges) {
                bool u_in_t = set_contains(t, e.u);
                bool v_in_t = set_contains(t, e.v);
                CHECK(u_in_t != v_in_t);
                CHECK(set_contains(n, u_in_t ? e.v : e.u));
            }
        }
    }
}

TEST_CASE("acceptable sets") {
    Graph c8 = cycle_graph(8);
    auto parts = bipartition(c8);
    REQUIRE(parts.has_value());
    CHECK(is_acceptable(c8, *parts, vs({1})));
    // Sets from the second part work symmetrically.
    CHECK(is_acceptable(c8, *parts, vs({2})));
    CHECK_FALSE(is_acceptable(c8, *parts, vs({1, 3, 5, 7})));

    CHECK_THROWS_AS(is_acceptable(c8, *parts, 0), InvalidInput);
    CHECK_THROWS_AS(is_acceptable(c8, *parts, vs({1, 2})), InvalidInput);
}

TEST_CASE("regularity") {
    CHECK(is_regular(petersen_graph()));
    CHECK_FALSE(is_regular(wheel_graph(9)));
    CHECK(is_regular(cycle_graph(6)));
}

TEST_CASE("parser survives arbitrary bytes") {
    PortableRng rng(97);
    const char alphabet[] = "0123456789 \t\n#ab-";
    for (int trial = 0; trial < 500; ++trial) {
        std::string text;
        int len = rng.int_in(0, 40);
        for (int i = 0; i < len; ++i) {
            text += alphabet[rng.below(sizeof alphabet - 1)];
        }
        try {
            Graph g = parse_graph(text);
            CHECK(g.vertex_count() >= 2);  // anything accepted is a valid graph
        } catch (const ParseError&) {
            // rejection with a located error is the expected outcome
        }
    }
}

TEST_CASE("graph constructor rejects bad input") {
    CHECK_THROWS_AS(Graph(1, {}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{1, 2}}), InvalidInput);          // isolated 3
    CHECK_THROWS_AS(Graph(2, {{1, 2}, {1, 2}}), InvalidInput);  // duplicate
    CHECK_THROWS_AS(Graph(2, {{1, 1}, {1, 2}}), InvalidInput);  // loop
    CHECK_THROWS_AS(Graph(2, {{1, 3}}), InvalidInput);          // range
    CHECK_THROWS_AS(Graph(65, {{1, 2}}), InvalidInput);         // cap
}
