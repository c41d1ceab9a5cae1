#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "edgering/canonical.hpp"
#include "edgering/families.hpp"
#include "edgering/graph.hpp"

namespace edgering {

inline constexpr int kReportSchemaVersion = 1;

// Serializable snapshot of a full analysis. Every analysis that was not
// performed appears as an explicit null in the JSON, never a missing key.
struct Report {
    struct FamilyEcho {
        std::string name;
        std::vector<int> params;
        friend bool operator==(const FamilyEcho&, const FamilyEcho&) = default;
    };
    struct Hilbert {
        int krull_dim = 0;
        int polytope_dim = 0;
        int ell = 0;
        int socle_degree = 0;
        int a_invariant = 0;
        bool cohen_macaulay = true;
        std::vector<std::int64_t> hilbert_values;
        std::vector<std::int64_t> h_vector;
        friend bool operator==(const Hilbert&, const Hilbert&) = default;
    };
    struct Canonical {
        int mu = 0;
        std::int64_t e_tilde = 0;
        std::vector<std::pair<int, std::int64_t>> interior_counts;
        std::vector<int> generator_degrees;
        std::vector<std::vector<int>> generators;
        friend bool operator==(const Canonical&, const Canonical&) = default;
    };
    struct Classification {
        bool gorenstein = false;
        bool pseudo_gorenstein = false;
        bool condition_star = false;
        std::optional<bool> almost_gorenstein;
        std::optional<bool> level;
        friend bool operator==(const Classification&, const Classification&) = default;
    };

    int schema_version = kReportSchemaVersion;
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::optional<FamilyEcho> family;

    bool connected = true;
    bool bipartite = false;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition_parts;
    bool two_connected = false;
    std::vector<std::vector<int>> block_vertices;
    bool regular = false;
    std::optional<bool> hamiltonian;

    bool normal = false;
    std::optional<Hilbert> hilbert;
    std::optional<Canonical> canonical;
    std::optional<Classification> classification;
    std::optional<std::vector<bool>> matching_covered_blocks;
    std::optional<int> phi;

    std::vector<std::string> warnings;
    std::map<std::string, double> timing_ms;

    friend bool operator==(const Report&, const Report&) = default;
};

struct ReportOptions {
    AnalysisOptions analysis;
    std::optional<FamilySpec> family_echo;
};

Report build_report(const Graph& g, const ReportOptions& opts = {},
                    const Guards& guards = default_guards());

nlohmann::ordered_json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

// Human-readable table.
std::string report_pretty(const Report& r);

}  // namespace edgering
