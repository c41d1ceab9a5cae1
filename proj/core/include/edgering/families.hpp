#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgering/graph.hpp"

namespace edgering {

// Named graph families accepted on the command line.
struct FamilySpec {
    enum class Name {
        complete_bipartite,  // kmn m n
        complete,            // complete n
        gmnr,                // gmnr m n r
        frak_g,              // frak_g k
        wheel,               // wheel n  (n rim vertices plus a hub)
        petersen,
        h1,
        h2,
        h3,
        cycle,               // cycle n
    };

    Name name;
    std::vector<int> params;

    // Accepts the CLI family tokens, e.g. "kmn", "gmnr", "frak_g".
    static FamilySpec from_cli(const std::string& token, std::vector<int> params);
    std::string token() const;
};

Graph build_family(const FamilySpec& spec);

Graph complete_bipartite_graph(int m, int n);
Graph complete_graph(int n);

// K_{m,n} on parts [m] and m+1..m+n with the matching {i, i+m}, i <= r,
// removed. Requires m, n >= 3 and 0 <= r <= min(m, n).
Graph gmnr_graph(int m, int n, int r);

// A chain of k quadrilaterals glued at opposite corners, closed by one edge
// between the chain's end vertices: vertices v_1..v_{k+1}, u_1..u_k,
// w_1..w_k; each unit is the 4-cycle v_i, u_i, v_{i+1}, w_i.
Graph frak_g_graph(int k);

// Cycle on n rim vertices plus a hub adjacent to every rim vertex; the hub
// is the last vertex.
Graph wheel_graph(int rim);

Graph petersen_graph();
Graph h1_graph();
Graph h2_graph();
Graph h3_graph();
Graph cycle_graph(int n);

// Closed-form h-polynomials, as dense coefficient lists.
std::vector<std::int64_t> h_formula_complete_bipartite(int m, int n);
std::vector<std::int64_t> h_formula_gmnr(int m, int n, int r);
std::vector<std::int64_t> h_formula_frak_g(int k);

// Formula attached to a family, when one is implemented.
std::optional<std::vector<std::int64_t>> h_formula_for(const FamilySpec& spec);

}  // namespace edgering
