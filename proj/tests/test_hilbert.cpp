#include <doctest.h>

#include "edgering/cycles.hpp"
#include "edgering/generate.hpp"
#include "edgering/hilbert.hpp"
#include "test_util.hpp"

using namespace edgering;

namespace {

// Oracle for C4: the edge ring is a rank-4 hypersurface ring, so
// H(k) = C(k+3,3) - C(k+1,3) = (k+1)^2.
std::int64_t c4_hypersurface_oracle(int k) {
    return binomial(k + 3, 3) - binomial(k + 1, 3);
}

}  // namespace

TEST_CASE("binomials") {
    CHECK(binomial(6, 4) == 15);
    CHECK(binomial(5, 4) == 5);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial_integer(-1, 3) == -1);
    CHECK(binomial_integer(-5, 2) == 15);
    CHECK(binomial_integer(3, 0) == 1);
    CHECK_THROWS_AS(binomial(80, 40), InternalError);  // 64-bit overflow
}

TEST_CASE("hilbert function of C4 matches the hypersurface oracle") {
    auto h = hilbert_function(cycle_graph(4), 6);
    for (int k = 0; k <= 6; ++k) {
        CHECK(h[k] == c4_hypersurface_oracle(k));
        CHECK(h[k] == (k + 1) * (k + 1));
    }
}

TEST_CASE("hilbert function values of K33 and Petersen") {
    auto k33 = hilbert_function(complete_bipartite_graph(3, 3), 2);
    CHECK(k33 == std::vector<std::int64_t>{1, 9, 36});
    auto pet = hilbert_function(petersen_graph(), 1);
    CHECK(pet[1] == 15);
}

TEST_CASE("h-vectors of the named graphs") {
    CHECK(hilbert_summary(petersen_graph()).h_vector ==
          std::vector<std::int64_t>{1, 5, 15, 25, 5, 1});
    CHECK(hilbert_summary(h1_graph()).h_vector == std::vector<std::int64_t>{1, 1});
    CHECK(hilbert_summary(h2_graph()).h_vector == std::vector<std::int64_t>{1, 2, 1});
    CHECK(hilbert_summary(h3_graph()).h_vector == std::vector<std::int64_t>{1, 3, 3});
    CHECK(hilbert_summary(complete_graph(5)).h_vector ==
          std::vector<std::int64_t>{1, 5, 5});
    CHECK(hilbert_summary(complete_bipartite_graph(3, 3)).h_vector ==
          std::vector<std::int64_t>{1, 4, 1});
}

TEST_CASE("summary invariants on normal graphs") {
    for (const Graph& g : {cycle_graph(4), cycle_graph(6), petersen_graph(),
                           complete_graph(5), h2_graph(), gmnr_graph(3, 4, 1)}) {
        HilbertSummary s = hilbert_summary(g);
        REQUIRE(s.cohen_macaulay);
        CHECK(s.h_vector.front() == 1);
        CHECK(s.h_vector.back() != 0);
        CHECK(s.socle_degree == static_cast<int>(s.h_vector.size()) - 1);
        CHECK(s.a_invariant == -s.ell);
        CHECK(s.socle_degree == s.krull_dim - s.ell);
        CHECK(s.polytope_dim == s.krull_dim - 1);
    }
}

TEST_CASE("degenerate single edge") {
    HilbertSummary s = hilbert_summary(testutil::path_graph(2));
    CHECK(s.krull_dim == 1);
    CHECK(s.h_vector == std::vector<std::int64_t>{1});
    CHECK(s.socle_degree == 0);
    CHECK(s.ell == 1);
}

TEST_CASE("non-normal input yields a flagged formal numerator") {
    HilbertSummary s = hilbert_summary(testutil::two_triangles_bridged());
    CHECK_FALSE(s.cohen_macaulay);
    CHECK(s.h_vector.front() == 1);
    CHECK(s.h_vector.back() != 0);
    // The numerator reproduces every computed Hilbert value.
    for (std::size_t k = 0; k < s.hilbert_values.size(); ++k) {
        CHECK(ehrhart_value(s.h_vector, s.krull_dim - 1, static_cast<std::int64_t>(k)) ==
              s.hilbert_values[k]);
    }
    // For this ring the geometric ell and the numerator degree disagree with
    // the Cohen-Macaulay relation s = dim - ell.
    CHECK(s.socle_degree != s.krull_dim - s.ell);
}

TEST_CASE("e_tilde values") {
    CHECK(e_tilde(std::vector<std::int64_t>{1, 8, 27, 30, 9, 1}) == 6);
    CHECK(e_tilde(std::vector<std::int64_t>{1, 4, 1}) == 0);
    CHECK(e_tilde(std::vector<std::int64_t>{1, 7, 9, 1}) == 2);
    CHECK(e_tilde(std::vector<std::int64_t>{1, 5, 15, 25, 5, 1}) == 10);
    CHECK(e_tilde(std::vector<std::int64_t>{1}) == 0);
}

TEST_CASE("ehrhart expansion of C4 is (k+1)^2") {
    HilbertSummary s = hilbert_summary(cycle_graph(4));
    EhrhartPolynomial L = ehrhart_polynomial(s);
    auto coeffs = L.coefficients();
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0] == Rational{1, 1});
    CHECK(coeffs[1] == Rational{2, 1});
    CHECK(coeffs[2] == Rational{1, 1});
    for (int k = 0; k <= 5; ++k) {
        CHECK(L.evaluate(k) == (k + 1) * (k + 1));
    }
}

TEST_CASE("ehrhart evaluation matches enumeration for K33") {
    HilbertSummary s = hilbert_summary(complete_bipartite_graph(3, 3));
    EhrhartPolynomial L = ehrhart_polynomial(s);
    CHECK(L.evaluate(0) == 1);
    CHECK(L.evaluate(1) == 9);
    CHECK(L.evaluate(2) == 36);
    CHECK(ehrhart_value(s.h_vector, s.polytope_dim, 2) == 36);
}

TEST_CASE("h-vector entries sum to the normalized volume") {
    for (const Graph& g : {cycle_graph(4), complete_bipartite_graph(3, 3),
                           complete_graph(5), petersen_graph()}) {
        HilbertSummary s = hilbert_summary(g);
        EhrhartPolynomial L = ehrhart_polynomial(s);
        // The scaled leading coefficient is the leading coefficient times
        // polytope_dim factorial, i.e. the normalized volume.
        std::int64_t total = 0;
        for (std::int64_t h : s.h_vector) total += h;
        CHECK(L.scaled_coefficients.back() == total);
    }
}

TEST_CASE("binomial form reproduces the Hilbert function past the numerator") {
    PortableRng rng(47);
    RandomGraphOptions opts;
    opts.min_vertices = 4;
    opts.max_vertices = 8;
    int tested = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected_graph(rng, opts);
        if (!odd_cycle_condition(g)) continue;
        HilbertSummary s = hilbert_summary(g);
        REQUIRE(s.cohen_macaulay);
        ++tested;
        auto H = hilbert_function(g, s.socle_degree + 2);
        for (int k = 0; k <= s.socle_degree + 2; ++k) {
            CHECK(ehrhart_value(s.h_vector, s.polytope_dim, k) == H[k]);
        }
    }
    CHECK(tested >= 15);
}

TEST_CASE("bipartite h-polynomials multiply over blocks") {
    // Two squares glued at a vertex.
    Graph g(7, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
    auto h = hilbert_summary(g).h_vector;
    auto c4h = hilbert_summary(cycle_graph(4)).h_vector;
    CHECK(h == poly_mul(c4h, c4h));

    // Trees are polynomial rings.
    CHECK(hilbert_summary(testutil::path_graph(5)).h_vector ==
          std::vector<std::int64_t>{1});

    // A square with a pendant edge.
    Graph g2(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}});
    CHECK(hilbert_summary(g2).h_vector == c4h);

    // Random bipartite graphs with cut vertices.
    PortableRng rng(53);
    RandomGraphOptions opts;
    opts.min_vertices = 4;
    opts.max_vertices = 9;
    opts.bipartite = true;
    int tested = 0;
    for (int trial = 0; trial < 40 && tested < 12; ++trial) {
        Graph sample = random_connected_graph(rng, opts);
        auto bs = blocks(sample);
        if (bs.size() < 2) continue;
        ++tested;
        std::vector<std::int64_t> product{1};
        for (const Block& b : bs) {
            product = poly_mul(product, hilbert_summary(b.graph).h_vector);
        }
        CHECK(hilbert_summary(sample).h_vector == product);
    }
    CHECK(tested >= 5);
}

TEST_CASE("hilbert rejects disconnected graphs") {
    CHECK_THROWS_AS(hilbert_summary(testutil::two_disjoint_triangles()), InvalidInput);
}
