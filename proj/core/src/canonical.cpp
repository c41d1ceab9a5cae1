#include "edgering/canonical.hpp"

#include <chrono>
#include <unordered_set>

#include "edgering/cycles.hpp"
#include "edgering/ear_decomposition.hpp"
#include "edgering/matching.hpp"

namespace edgering {

CanonicalSummary canonical_summary(const EdgePolytope& p, const HilbertSummary& hs,
                                   const Guards& guards) {
    if (!hs.cohen_macaulay) {
        throw InvalidInput("canonical_summary: edge ring is not normal");
    }
    CanonicalSummary out;
    out.ell = hs.ell;
    out.krull_dim = hs.krull_dim;
    out.e_tilde = e_tilde(hs.h_vector);

    // Minimal generators of the interior ideal can only occur in degrees
    // ell..krull_dim: over a linear Noether normalization the module is free
    // with generator degrees listed by its series numerator, which ends at
    // ell + socle_degree = krull_dim.
    const std::vector<std::int64_t> reversed(hs.h_vector.rbegin(), hs.h_vector.rend());
    std::unordered_set<LatticePoint, LatticePointHash> below;
    for (int k = hs.ell; k <= hs.krull_dim; ++k) {
        std::vector<LatticePoint> pts = interior_points(p, k, guards);
        out.interior_counts.emplace_back(k, static_cast<std::int64_t>(pts.size()));

        // The canonical module of a normal ring has Hilbert function given
        // by the reversed h-vector shifted to start at ell (Ehrhart
        // reciprocity); mismatch means the enumeration is broken.
        std::int64_t expected = 0;
        for (std::size_t j = 0; j < reversed.size(); ++j) {
            expected += reversed[j] * binomial_integer(k - hs.ell - static_cast<std::int64_t>(j) +
                                                           hs.krull_dim - 1,
                                                       hs.krull_dim - 1);
        }
        if (expected != static_cast<std::int64_t>(pts.size())) {
            throw InternalError("canonical_summary: interior counts disagree with "
                                "the reversed numerator");
        }

        for (const LatticePoint& v : pts) {
            bool minimal = true;
            LatticePoint w;
            for (const LatticePoint& gen : p.generators()) {
                if (v.try_minus(gen, w) && below.contains(w)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.generators.emplace_back(v, k);
        }
        below.clear();
        below.insert(pts.begin(), pts.end());
    }
    out.mu = static_cast<int>(out.generators.size());

    if (out.interior_counts.front().second != hs.h_vector.back()) {
        throw InternalError("canonical_summary: interior count at ell differs from "
                            "the top h-coefficient");
    }
    if (out.mu < 1) {
        throw InternalError("canonical_summary: no generators found");
    }
    if (out.e_tilde < out.mu - 1) {
        throw InternalError("canonical_summary: e_tilde < mu - 1");
    }
    return out;
}

CanonicalSummary canonical_summary(const Graph& g, const Guards& guards) {
    EdgePolytope p = EdgePolytope::build(g, guards);
    return canonical_summary(p, hilbert_summary(p, guards), guards);
}

bool is_pseudo_gorenstein(std::span<const std::int64_t> h) {
    if (h.empty()) throw InvalidInput("empty h-vector");
    return h.back() == 1;
}

bool is_gorenstein(std::span<const std::int64_t> h) {
    if (h.empty()) throw InvalidInput("empty h-vector");
    const std::size_t s = h.size() - 1;
    for (std::size_t i = 0; i <= s / 2; ++i) {
        if (h[i] != h[s - i]) return false;
    }
    return true;
}

bool condition_star(std::span<const std::int64_t> h) {
    if (h.empty()) throw InvalidInput("empty h-vector");
    const std::size_t s = h.size() - 1;
    for (std::size_t i = 0; i <= s / 2; ++i) {
        // The comparison pair touching position 1 (equivalently s-1) is the
        // exempted one; for s = 1 that is the only pair.
        if (i == 1 || s - i == 1) continue;
        if (h[i] != h[s - i]) return false;
    }
    return true;
}

bool is_almost_gorenstein(const CanonicalSummary& c) {
    return c.e_tilde == c.mu - 1;
}

bool is_level(const CanonicalSummary& c) {
    for (const auto& [point, degree] : c.generators) {
        if (degree != c.ell) return false;
    }
    return true;
}

namespace {

class StageTimer {
public:
    StageTimer(StageTimings* sink, std::string name)
        : sink_(sink), name_(std::move(name)),
          start_(std::chrono::steady_clock::now()) {}

    ~StageTimer() {
        if (!sink_) return;
        auto end = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(end - start_).count();
        sink_->entries.emplace_back(name_, ms);
    }

private:
    StageTimings* sink_;
    std::string name_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

Analysis analyze(const Graph& g, const AnalysisOptions& opts, const Guards& guards,
                 StageTimings* timings) {
    if (!is_connected(g)) {
        throw InvalidInput("graph must be connected");
    }

    Analysis a;
    {
        StageTimer t(timings, "structure");
        a.parts = bipartition(g);
        a.bipartite = a.parts.has_value();
        a.two_connected = is_two_connected(g);
        a.regular = is_regular(g);
        a.graph_blocks = blocks(g);
        if (opts.with_hamiltonian) {
            if (g.edge_count() <= guards.max_search_edges) {
                a.hamiltonian = is_hamiltonian(g, guards);
            } else {
                a.warnings.push_back("hamiltonicity skipped: edge count exceeds the "
                                     "search guard");
            }
        }
    }
    {
        StageTimer t(timings, "normality");
        a.normal = odd_cycle_condition(g, guards);
    }

    EdgePolytope polytope = [&] {
        StageTimer t(timings, "polytope");
        return EdgePolytope::build(g, guards);
    }();

    {
        StageTimer t(timings, "hilbert");
        if (a.normal || opts.nonnormal_numerator) {
            a.hilbert = hilbert_summary(polytope, guards);
        } else {
            a.warnings.push_back("series numerator skipped for non-normal input");
        }
    }
    {
        StageTimer t(timings, "canonical");
        if (a.normal && opts.with_canonical) {
            a.canonical = canonical_summary(polytope, *a.hilbert, guards);
        }
    }

    {
        StageTimer t(timings, "classification");
        ClassificationReport& c = a.classification;
        c.normal = a.normal;
        if (a.normal) {
            const auto& h = a.hilbert->h_vector;
            c.pseudo_gorenstein = is_pseudo_gorenstein(h);
            c.gorenstein = is_gorenstein(h);
            c.condition_star = condition_star(h);
            if (a.canonical) {
                c.almost_gorenstein = is_almost_gorenstein(*a.canonical);
                c.level = is_level(*a.canonical);
            }
        } else {
            a.warnings.push_back("edge ring is not normal: Gorenstein-type "
                                 "classification suppressed");
        }

        if (a.bipartite) {
            std::vector<bool> mc;
            mc.reserve(a.graph_blocks.size());
            for (const Block& b : a.graph_blocks) {
                mc.push_back(is_matching_covered(b.graph, guards));
            }
            c.matching_covered_blocks = mc;
            if (a.two_connected) {
                c.phi = phi_bipartite(g, a.hilbert->ell);
            }

            // For bipartite graphs pseudo-Gorenstein must coincide with all
            // blocks matching-covered; a mismatch is a bug somewhere above.
            bool all_mc = true;
            for (bool f : mc) all_mc = all_mc && f;
            if (c.pseudo_gorenstein.has_value() && *c.pseudo_gorenstein != all_mc) {
                throw InternalError("classification: bipartite pseudo-Gorenstein flag "
                                    "disagrees with matching-covered blocks");
            }
        }

        // Almost Gorenstein with socle degree >= 2 forces a leading
        // h-coefficient of 1.
        if (c.almost_gorenstein.value_or(false) && a.hilbert &&
            a.hilbert->socle_degree >= 2 && !c.pseudo_gorenstein.value_or(false)) {
            throw InternalError("classification: almost Gorenstein with socle degree "
                                ">= 2 but top h-coefficient != 1");
        }

        if (g.vertex_count() == 2 ||
            (a.hilbert && a.hilbert->socle_degree == 0)) {
            a.warnings.push_back("degenerate input: constant h-polynomial, "
                                 "classifications hold trivially");
        }
    }
    return a;
}

ClassificationReport classify(const Graph& g, const AnalysisOptions& opts,
                              const Guards& guards) {
    return analyze(g, opts, guards).classification;
}

}  // namespace edgering
