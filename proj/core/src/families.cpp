#include "edgering/families.hpp"

#include <algorithm>

#include "edgering/hilbert.hpp"

namespace edgering {

namespace {

void expect_params(const FamilySpec& spec, std::size_t n) {
    if (spec.params.size() != n) {
        throw InvalidInput("family " + spec.token() + " takes " + std::to_string(n) +
                           " parameter(s), got " + std::to_string(spec.params.size()));
    }
}

}  // namespace

FamilySpec FamilySpec::from_cli(const std::string& token, std::vector<int> params) {
    FamilySpec spec{Name::petersen, std::move(params)};
    if (token == "kmn" || token == "complete_bipartite") {
        spec.name = Name::complete_bipartite;
    } else if (token == "complete") {
        spec.name = Name::complete;
    } else if (token == "gmnr") {
        spec.name = Name::gmnr;
    } else if (token == "frak_g" || token == "frakg") {
        spec.name = Name::frak_g;
    } else if (token == "wheel") {
        spec.name = Name::wheel;
    } else if (token == "petersen") {
        spec.name = Name::petersen;
    } else if (token == "h1") {
        spec.name = Name::h1;
    } else if (token == "h2") {
        spec.name = Name::h2;
    } else if (token == "h3") {
        spec.name = Name::h3;
    } else if (token == "cycle") {
        spec.name = Name::cycle;
    } else {
        throw InvalidInput("unknown family \"" + token + "\"");
    }
    return spec;
}

std::string FamilySpec::token() const {
    switch (name) {
        case Name::complete_bipartite: return "kmn";
        case Name::complete: return "complete";
        case Name::gmnr: return "gmnr";
        case Name::frak_g: return "frak_g";
        case Name::wheel: return "wheel";
        case Name::petersen: return "petersen";
        case Name::h1: return "h1";
        case Name::h2: return "h2";
        case Name::h3: return "h3";
        case Name::cycle: return "cycle";
    }
    return "?";
}

Graph complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1) throw InvalidInput("kmn requires m, n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * n);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) edges.emplace_back(i, m + j);
    }
    return Graph(m + n, std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 2) throw InvalidInput("complete requires n >= 2");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, std::move(edges));
}

Graph gmnr_graph(int m, int n, int r) {
    if (m < 3 || n < 3) throw InvalidInput("gmnr requires m, n >= 3");
    if (r < 0 || r > std::min(m, n)) {
        throw InvalidInput("gmnr requires 0 <= r <= min(m, n)");
    }
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j && i <= r) continue;  // removed matching {i, i+m}
            edges.emplace_back(i, m + j);
        }
    }
    return Graph(m + n, std::move(edges));
}

Graph frak_g_graph(int k) {
    if (k < 1) throw InvalidInput("frak_g requires k >= 1");
    // Labels: v_i = i for i in [k+1], u_i = k+1+i, w_i = 2k+1+i.
    auto v = [](int i) { return i; };
    auto u = [k](int i) { return k + 1 + i; };
    auto w = [k](int i) { return 2 * k + 1 + i; };
    std::vector<Edge> edges;
    edges.emplace_back(v(1), v(k + 1));
    for (int i = 1; i <= k; ++i) {
        edges.emplace_back(v(i), u(i));
        edges.emplace_back(v(i), w(i));
        edges.emplace_back(u(i), v(i + 1));
        edges.emplace_back(w(i), v(i + 1));
    }
    return Graph(3 * k + 1, std::move(edges));
}

Graph wheel_graph(int rim) {
    if (rim < 3) throw InvalidInput("wheel requires at least 3 rim vertices");
    std::vector<Edge> edges;
    const int hub = rim + 1;
    for (int i = 1; i <= rim; ++i) {
        edges.emplace_back(i, i % rim + 1);
        edges.emplace_back(i, hub);
    }
    return Graph(rim + 1, std::move(edges));
}

Graph petersen_graph() {
    // Outer 5-cycle 1..5, inner pentagram 6..10, spokes i -- i+5.
    std::vector<Edge> edges;
    for (int i = 1; i <= 5; ++i) {
        edges.emplace_back(i, i % 5 + 1);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 1) % 5 + 6);
    }
    return Graph(10, std::move(edges));
}

Graph h1_graph() {
    return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
}

Graph h2_graph() {
    return Graph(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 6}, {3, 6}, {3, 7}, {5, 7}});
}

Graph h3_graph() {
    return Graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 3}, {3, 5}, {3, 6}});
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidInput("cycle requires n >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
    return Graph(n, std::move(edges));
}

Graph build_family(const FamilySpec& spec) {
    using Name = FamilySpec::Name;
    switch (spec.name) {
        case Name::complete_bipartite:
            expect_params(spec, 2);
            return complete_bipartite_graph(spec.params[0], spec.params[1]);
        case Name::complete:
            expect_params(spec, 1);
            return complete_graph(spec.params[0]);
        case Name::gmnr:
            expect_params(spec, 3);
            return gmnr_graph(spec.params[0], spec.params[1], spec.params[2]);
        case Name::frak_g:
            expect_params(spec, 1);
            return frak_g_graph(spec.params[0]);
        case Name::wheel:
            expect_params(spec, 1);
            return wheel_graph(spec.params[0]);
        case Name::petersen:
            expect_params(spec, 0);
            return petersen_graph();
        case Name::h1:
            expect_params(spec, 0);
            return h1_graph();
        case Name::h2:
            expect_params(spec, 0);
            return h2_graph();
        case Name::h3:
            expect_params(spec, 0);
            return h3_graph();
        case Name::cycle:
            expect_params(spec, 1);
            return cycle_graph(spec.params[0]);
    }
    throw InvalidInput("unknown family");
}

std::vector<std::int64_t> h_formula_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw InvalidInput("kmn formula requires m, n >= 1");
    std::vector<std::int64_t> h;
    for (int i = 0; i <= std::min(m, n); ++i) {
        h.push_back(binomial(m - 1, i) * binomial(n - 1, i));
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    return h;
}

std::vector<std::int64_t> h_formula_gmnr(int m, int n, int r) {
    if (m < 3 || n < 3 || r < 0 || r > std::min(m, n)) {
        throw InvalidInput("gmnr formula requires m, n >= 3 and 0 <= r <= min(m, n)");
    }
    std::vector<std::int64_t> h = h_formula_complete_bipartite(m, n);
    h[1] -= r;
    return h;
}

std::vector<std::int64_t> h_formula_frak_g(int k) {
    if (k < 1) throw InvalidInput("frak_g formula requires k >= 1");
    std::vector<std::int64_t> h{1};
    const std::vector<std::int64_t> binom{1, 1};
    for (int i = 0; i < k; ++i) h = poly_mul(h, binom);
    return h;
}

std::optional<std::vector<std::int64_t>> h_formula_for(const FamilySpec& spec) {
    using Name = FamilySpec::Name;
    switch (spec.name) {
        case Name::complete_bipartite:
            expect_params(spec, 2);
            return h_formula_complete_bipartite(spec.params[0], spec.params[1]);
        case Name::gmnr:
            expect_params(spec, 3);
            return h_formula_gmnr(spec.params[0], spec.params[1], spec.params[2]);
        case Name::frak_g:
            expect_params(spec, 1);
            return h_formula_frak_g(spec.params[0]);
        default:
            return std::nullopt;
    }
}

}  // namespace edgering
