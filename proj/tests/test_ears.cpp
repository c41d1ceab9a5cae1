#include <doctest.h>

#include "edgering/ear_decomposition.hpp"
#include "edgering/hilbert.hpp"
#include "test_util.hpp"

using namespace edgering;

TEST_CASE("phi of cycles") {
    CHECK(phi_bruteforce(cycle_graph(6)) == 1);
    CHECK(phi_bruteforce(cycle_graph(4)) == 1);
    CHECK(phi_bruteforce(cycle_graph(5)) == 0);  // odd cycle, no even ear
}

TEST_CASE("phi of K4 is 1") {
    // Every ear decomposition needs one even ear: the fourth vertex can only
    // enter through a length-2 path, and a 4-cycle start is itself even.
    CHECK(phi_bruteforce(complete_graph(4)) == 1);
}

TEST_CASE("phi of the quad chains") {
    CHECK(phi_bruteforce(frak_g_graph(1)) == 1);
    CHECK(phi_bruteforce(frak_g_graph(2)) == 2);
    CHECK(phi_bruteforce(frak_g_graph(3)) == 3);
}

TEST_CASE("phi of the counterexample graphs") {
    CHECK(phi_bruteforce(h2_graph()) == 2);
    CHECK(phi_bruteforce(h3_graph()) == 1);
}

TEST_CASE("phi rejects graphs that are not 2-connected") {
    CHECK_THROWS_AS(phi_bruteforce(testutil::path_graph(3)), InvalidInput);
    CHECK_THROWS_AS(phi_bruteforce(testutil::path_graph(2)), InvalidInput);
}

TEST_CASE("phi search is guarded on edges") {
    Guards tight;
    tight.max_search_edges = 5;
    CHECK_THROWS_AS(phi_bruteforce(cycle_graph(6), tight), GuardError);
}

TEST_CASE("phi via ell matches the exhaustive search") {
    for (int n : {4, 6, 8}) {
        Graph c = cycle_graph(n);
        int l = ell(EdgePolytope::build(c));
        CHECK(phi_bipartite(c, l) == phi_bruteforce(c));
    }
    Graph k33 = complete_bipartite_graph(3, 3);
    CHECK(phi_bipartite(k33, ell(EdgePolytope::build(k33))) == phi_bruteforce(k33));
}

TEST_CASE("phi via ell validates its preconditions") {
    CHECK_THROWS_AS(phi_bipartite(complete_graph(5), 3), InvalidInput);
    CHECK_THROWS_AS(phi_bipartite(testutil::path_graph(3), 2), InvalidInput);
    // ell far below |V| would make 2*ell - |V| + 1 non-positive.
    CHECK_THROWS_AS(phi_bipartite(cycle_graph(8), 1), InternalError);
}
