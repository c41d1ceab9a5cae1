#include <doctest.h>

#include "edgering/cycles.hpp"
#include "edgering/generate.hpp"
#include "test_util.hpp"

using namespace edgering;
using testutil::vs;

namespace {

// Oracle: enumerate ALL simple odd cycles (not only chordless ones) and test
// every vertex-disjoint pair within each component for a joining edge.
void all_cycles_from(const Graph& g, std::vector<int>& path, VertexSet used,
                     std::vector<VertexSet>& out) {
    int s = path.front();
    int last = path.back();
    for (int x : set_vertices(g.adjacency(last) & ~used)) {
        if (x < s) continue;
        if (path.size() >= 2 && g.has_edge(x, s) && path[1] < x &&
            path.size() % 2 == 0) {
            out.push_back(used | vertex_bit(x));
        }
        path.push_back(x);
        all_cycles_from(g, path, used | vertex_bit(x), out);
        path.pop_back();
    }
}

bool occ_oracle(const Graph& g) {
    std::vector<VertexSet> cycles;
    for (int s = 1; s <= g.vertex_count(); ++s) {
        std::vector<int> path{s};
        all_cycles_from(g, path, vertex_bit(s), cycles);
    }
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            if (cycles[i] & cycles[j]) continue;
            if ((neighborhood(g, cycles[i]) & cycles[j]) == 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("induced odd cycles of small graphs") {
    CHECK(induced_odd_cycles(cycle_graph(4)).empty());
    CHECK(induced_odd_cycles(complete_graph(3)).size() == 1);
    CHECK(induced_odd_cycles(cycle_graph(5)) == std::vector<VertexSet>{vs({1, 2, 3, 4, 5})});
    // K4: four triangles, no chordless cycle longer than 3.
    CHECK(induced_odd_cycles(complete_graph(4)).size() == 4);
    // Petersen: the twelve 5-cycles are the only chordless odd cycles.
    CHECK(induced_odd_cycles(petersen_graph()).size() == 12);
}

TEST_CASE("odd cycle condition on named graphs") {
    CHECK(odd_cycle_condition(complete_graph(5)));
    CHECK_FALSE(odd_cycle_condition(testutil::two_disjoint_triangles()));
    CHECK(odd_cycle_condition(petersen_graph()));
    CHECK(odd_cycle_condition(cycle_graph(4)));           // bipartite, vacuous
    CHECK_FALSE(odd_cycle_condition(testutil::two_triangles_bridged()));
    CHECK(odd_cycle_condition(frak_g_graph(2)));
    CHECK(odd_cycle_condition(frak_g_graph(3)));
    CHECK(odd_cycle_condition(wheel_graph(9)));
}

TEST_CASE("induced-cycle test equals the all-odd-cycles definition") {
    PortableRng rng(37);
    RandomGraphOptions opts;
    opts.min_vertices = 4;
    opts.max_vertices = 9;
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = random_connected_graph(rng, opts);
        CHECK(odd_cycle_condition(g) == occ_oracle(g));
    }
    CHECK(odd_cycle_condition(testutil::two_disjoint_triangles()) ==
          occ_oracle(testutil::two_disjoint_triangles()));
}

TEST_CASE("hamiltonicity") {
    CHECK(is_hamiltonian(cycle_graph(6)));
    CHECK_FALSE(is_hamiltonian(petersen_graph()));
    CHECK_FALSE(is_hamiltonian(testutil::path_graph(4)));
    CHECK(is_hamiltonian(complete_graph(5)));
    CHECK(is_hamiltonian(h3_graph()));

    Guards tight;
    tight.max_search_edges = 5;
    CHECK_THROWS_AS(is_hamiltonian(complete_graph(4), tight), GuardError);
}
