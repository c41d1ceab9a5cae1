#include "edgering/report.hpp"

#include <sstream>

namespace edgering {

namespace {

using json = nlohmann::ordered_json;

json opt_bool(const std::optional<bool>& v) {
    return v.has_value() ? json(*v) : json();
}

std::optional<bool> bool_or_null(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<bool>();
}

}  // namespace

Report build_report(const Graph& g, const ReportOptions& opts, const Guards& guards) {
    StageTimings timings;
    Analysis a = analyze(g, opts.analysis, guards, &timings);

    Report r;
    r.vertex_count = g.vertex_count();
    r.edges = g.edges();
    if (opts.family_echo) {
        r.family = Report::FamilyEcho{opts.family_echo->token(), opts.family_echo->params};
    }

    r.connected = true;
    r.bipartite = a.bipartite;
    if (a.parts) {
        r.bipartition_parts = {set_vertices(a.parts->part1), set_vertices(a.parts->part2)};
    }
    r.two_connected = a.two_connected;
    for (const Block& b : a.graph_blocks) r.block_vertices.push_back(b.vertices);
    r.regular = a.regular;
    r.hamiltonian = a.hamiltonian;

    r.normal = a.normal;
    if (a.hilbert) {
        r.hilbert = Report::Hilbert{
            a.hilbert->krull_dim,   a.hilbert->polytope_dim,  a.hilbert->ell,
            a.hilbert->socle_degree, a.hilbert->a_invariant,  a.hilbert->cohen_macaulay,
            a.hilbert->hilbert_values, a.hilbert->h_vector,
        };
    }
    if (a.canonical) {
        Report::Canonical c;
        c.mu = a.canonical->mu;
        c.e_tilde = a.canonical->e_tilde;
        c.interior_counts = a.canonical->interior_counts;
        for (const auto& [point, degree] : a.canonical->generators) {
            c.generator_degrees.push_back(degree);
            c.generators.push_back(point.coords());
        }
        r.canonical = std::move(c);
    }
    if (a.normal) {
        Report::Classification c;
        c.gorenstein = *a.classification.gorenstein;
        c.pseudo_gorenstein = *a.classification.pseudo_gorenstein;
        c.condition_star = *a.classification.condition_star;
        c.almost_gorenstein = a.classification.almost_gorenstein;
        c.level = a.classification.level;
        r.classification = std::move(c);
    }
    r.matching_covered_blocks = a.classification.matching_covered_blocks;
    r.phi = a.classification.phi;
    r.warnings = a.warnings;
    for (const auto& [stage, ms] : timings.entries) r.timing_ms[stage] = ms;
    return r;
}

json report_to_json(const Report& r) {
    json edges = json::array();
    for (const Edge& e : r.edges) edges.push_back({e.u, e.v});

    json j;
    j["schema_version"] = r.schema_version;
    j["input"] = {{"vertex_count", r.vertex_count}, {"edges", std::move(edges)}};
    if (r.family) {
        j["input"]["family"] = {{"name", r.family->name}, {"params", r.family->params}};
    } else {
        j["input"]["family"] = nullptr;
    }

    json structure;
    structure["connected"] = r.connected;
    structure["bipartite"] = r.bipartite;
    structure["bipartition"] =
        r.bipartition_parts
            ? json::array({r.bipartition_parts->first, r.bipartition_parts->second})
            : json();
    structure["two_connected"] = r.two_connected;
    structure["blocks"] = r.block_vertices;
    structure["regular"] = r.regular;
    structure["hamiltonian"] = opt_bool(r.hamiltonian);
    j["structure"] = std::move(structure);

    j["normal"] = r.normal;

    if (r.hilbert) {
        const auto& h = *r.hilbert;
        j["hilbert"] = {
            {"krull_dim", h.krull_dim},
            {"polytope_dim", h.polytope_dim},
            {"ell", h.ell},
            {"socle_degree", h.socle_degree},
            {"a_invariant", h.a_invariant},
            {"cohen_macaulay", h.cohen_macaulay},
            {"hilbert_values", h.hilbert_values},
            {"h_vector", h.h_vector},
        };
    } else {
        j["hilbert"] = nullptr;
    }

    if (r.canonical) {
        const auto& c = *r.canonical;
        json counts = json::array();
        for (const auto& [degree, count] : c.interior_counts) {
            counts.push_back({degree, count});
        }
        j["canonical"] = {
            {"mu", c.mu},
            {"e_tilde", c.e_tilde},
            {"interior_counts", std::move(counts)},
            {"generator_degrees", c.generator_degrees},
            {"generators", c.generators},
        };
    } else {
        j["canonical"] = nullptr;
    }

    if (r.classification) {
        const auto& c = *r.classification;
        j["classification"] = {
            {"gorenstein", c.gorenstein},
            {"pseudo_gorenstein", c.pseudo_gorenstein},
            {"condition_star", c.condition_star},
            {"almost_gorenstein", opt_bool(c.almost_gorenstein)},
            {"level", opt_bool(c.level)},
        };
    } else {
        j["classification"] = nullptr;
    }

    json certificates;
    certificates["matching_covered_blocks"] =
        r.matching_covered_blocks ? json(*r.matching_covered_blocks) : json();
    certificates["phi"] = r.phi ? json(*r.phi) : json();
    j["certificates"] = std::move(certificates);

    j["warnings"] = r.warnings;
    j["timing_ms"] = r.timing_ms;
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    const auto& input = j.at("input");
    r.vertex_count = input.at("vertex_count").get<int>();
    for (const auto& e : input.at("edges")) {
        r.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    if (!input.at("family").is_null()) {
        r.family = Report::FamilyEcho{input.at("family").at("name").get<std::string>(),
                                      input.at("family").at("params").get<std::vector<int>>()};
    }

    const auto& s = j.at("structure");
    r.connected = s.at("connected").get<bool>();
    r.bipartite = s.at("bipartite").get<bool>();
    if (!s.at("bipartition").is_null()) {
        r.bipartition_parts = {s.at("bipartition").at(0).get<std::vector<int>>(),
                               s.at("bipartition").at(1).get<std::vector<int>>()};
    }
    r.two_connected = s.at("two_connected").get<bool>();
    r.block_vertices = s.at("blocks").get<std::vector<std::vector<int>>>();
    r.regular = s.at("regular").get<bool>();
    r.hamiltonian = bool_or_null(s.at("hamiltonian"));

    r.normal = j.at("normal").get<bool>();

    if (!j.at("hilbert").is_null()) {
        const auto& h = j.at("hilbert");
        r.hilbert = Report::Hilbert{
            h.at("krull_dim").get<int>(),
            h.at("polytope_dim").get<int>(),
            h.at("ell").get<int>(),
            h.at("socle_degree").get<int>(),
            h.at("a_invariant").get<int>(),
            h.at("cohen_macaulay").get<bool>(),
            h.at("hilbert_values").get<std::vector<std::int64_t>>(),
            h.at("h_vector").get<std::vector<std::int64_t>>(),
        };
    }
    if (!j.at("canonical").is_null()) {
        const auto& c = j.at("canonical");
        Report::Canonical out;
        out.mu = c.at("mu").get<int>();
        out.e_tilde = c.at("e_tilde").get<std::int64_t>();
        for (const auto& pair : c.at("interior_counts")) {
            out.interior_counts.emplace_back(pair.at(0).get<int>(),
                                             pair.at(1).get<std::int64_t>());
        }
        out.generator_degrees = c.at("generator_degrees").get<std::vector<int>>();
        out.generators = c.at("generators").get<std::vector<std::vector<int>>>();
        r.canonical = std::move(out);
    }
    if (!j.at("classification").is_null()) {
        const auto& c = j.at("classification");
        Report::Classification out;
        out.gorenstein = c.at("gorenstein").get<bool>();
        out.pseudo_gorenstein = c.at("pseudo_gorenstein").get<bool>();
        out.condition_star = c.at("condition_star").get<bool>();
        out.almost_gorenstein = bool_or_null(c.at("almost_gorenstein"));
        out.level = bool_or_null(c.at("level"));
        r.classification = std::move(out);
    }

    const auto& cert = j.at("certificates");
    if (!cert.at("matching_covered_blocks").is_null()) {
        r.matching_covered_blocks =
            cert.at("matching_covered_blocks").get<std::vector<bool>>();
    }
    if (!cert.at("phi").is_null()) r.phi = cert.at("phi").get<int>();

    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.timing_ms = j.at("timing_ms").get<std::map<std::string, double>>();
    return r;
}

namespace {

std::string join_ints(const std::vector<std::int64_t>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i];
    }
    out << ")";
    return out.str();
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string opt_yn(const std::optional<bool>& b) {
    return b.has_value() ? yn(*b) : "-";
}

}  // namespace

std::string report_pretty(const Report& r) {
    std::ostringstream out;
    out << "vertices            " << r.vertex_count << "\n";
    out << "edges               " << r.edges.size() << "\n";
    out << "bipartite           " << yn(r.bipartite) << "\n";
    out << "2-connected         " << yn(r.two_connected) << "\n";
    out << "blocks              " << r.block_vertices.size() << "\n";
    out << "regular             " << yn(r.regular) << "\n";
    out << "hamiltonian         " << opt_yn(r.hamiltonian) << "\n";
    out << "normal              " << yn(r.normal) << "\n";
    if (r.hilbert) {
        out << "krull dimension     " << r.hilbert->krull_dim << "\n";
        out << "ell                 " << r.hilbert->ell << "\n";
        out << "socle degree        " << r.hilbert->socle_degree << "\n";
        out << "a-invariant         " << r.hilbert->a_invariant << "\n";
        out << (r.hilbert->cohen_macaulay ? "h-vector            "
                                          : "series numerator    ")
            << join_ints(r.hilbert->h_vector) << "\n";
    }
    if (r.canonical) {
        out << "mu(omega)           " << r.canonical->mu << "\n";
        out << "e-tilde             " << r.canonical->e_tilde << "\n";
    }
    if (r.classification) {
        out << "gorenstein          " << yn(r.classification->gorenstein) << "\n";
        out << "pseudo-gorenstein   " << yn(r.classification->pseudo_gorenstein) << "\n";
        out << "almost gorenstein   " << opt_yn(r.classification->almost_gorenstein) << "\n";
        out << "level               " << opt_yn(r.classification->level) << "\n";
        out << "condition (*)       " << yn(r.classification->condition_star) << "\n";
    }
    if (r.matching_covered_blocks) {
        out << "matching-covered    ";
        for (std::size_t i = 0; i < r.matching_covered_blocks->size(); ++i) {
            if (i) out << ", ";
            out << yn((*r.matching_covered_blocks)[i]);
        }
        out << "\n";
    }
    if (r.phi) out << "phi                 " << *r.phi << "\n";
    for (const std::string& w : r.warnings) out << "warning: " << w << "\n";
    return out.str();
}

}  // namespace edgering
