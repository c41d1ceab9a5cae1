#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/hilbert.hpp"
#include "edgering/polytope.hpp"

namespace edgering {

// Canonical-module data of a normal edge ring: the interior lattice points
// of the cone, graded by degree, and the minimal generators among them.
struct CanonicalSummary {
    int ell = 0;
    int krull_dim = 0;
    // (degree, interior point count) for degree = ell..krull_dim.
    std::vector<std::pair<int, std::int64_t>> interior_counts;
    // Minimal generators with their degrees, sorted by (degree, point).
    std::vector<std::pair<LatticePoint, int>> generators;
    int mu = 0;
    std::int64_t e_tilde = 0;
};

CanonicalSummary canonical_summary(const EdgePolytope& p, const HilbertSummary& hs,
                                   const Guards& guards = default_guards());
CanonicalSummary canonical_summary(const Graph& g, const Guards& guards = default_guards());

// Leading h-coefficient equals 1.
bool is_pseudo_gorenstein(std::span<const std::int64_t> h);

// Symmetric h-vector.
bool is_gorenstein(std::span<const std::int64_t> h);

// h_i = h_{s-i} for every i except possibly i = 1.
bool condition_star(std::span<const std::int64_t> h);

// e_tilde = mu - 1.
bool is_almost_gorenstein(const CanonicalSummary& c);

// All minimal generators live in the single degree ell. Best-effort notion
// of levelness for these rings.
bool is_level(const CanonicalSummary& c);

struct ClassificationReport {
    bool normal = false;
    // Absent when the ring is not normal; almost_gorenstein and level are
    // additionally absent when the canonical module was not requested.
    std::optional<bool> gorenstein;
    std::optional<bool> pseudo_gorenstein;
    std::optional<bool> almost_gorenstein;
    std::optional<bool> level;
    std::optional<bool> condition_star;
    // Bipartite graphs only, in blocks() order.
    std::optional<std::vector<bool>> matching_covered_blocks;
    // 2-connected bipartite graphs only.
    std::optional<int> phi;
};

struct AnalysisOptions {
    bool with_canonical = true;
    bool with_hamiltonian = true;
    // Compute the formal series numerator for non-normal input; costly for
    // dense graphs, so batch consumers may switch it off.
    bool nonnormal_numerator = true;
};

struct StageTimings {
    std::vector<std::pair<std::string, double>> entries;  // (stage, milliseconds)
};

// Full pipeline result for a connected graph.
struct Analysis {
    bool bipartite = false;
    std::optional<Bipartition> parts;
    bool two_connected = false;
    bool regular = false;
    std::optional<bool> hamiltonian;  // absent when outside the search guard
    std::vector<Block> graph_blocks;
    bool normal = false;
    std::optional<HilbertSummary> hilbert;
    std::optional<CanonicalSummary> canonical;
    ClassificationReport classification;
    std::vector<std::string> warnings;
};

Analysis analyze(const Graph& g, const AnalysisOptions& opts = {},
                 const Guards& guards = default_guards(),
                 StageTimings* timings = nullptr);

ClassificationReport classify(const Graph& g, const AnalysisOptions& opts = {},
                              const Guards& guards = default_guards());

}  // namespace edgering
