#include "edgering/generate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <unordered_set>

namespace edgering {

std::uint64_t PortableRng::below(std::uint64_t n) {
    if (n == 0) throw InvalidInput("PortableRng::below(0)");
    const std::uint64_t rem = (UINT64_MAX % n + 1) % n;
    const std::uint64_t threshold = UINT64_MAX - rem;
    for (;;) {
        std::uint64_t x = next();
        if (x <= threshold) return x % n;
    }
}

int PortableRng::int_in(int lo, int hi) {
    if (lo > hi) throw InvalidInput("PortableRng::int_in: empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

constexpr int kGenMax = 8;  // canonical forms are packed into 28 bits

using AdjRows = std::array<std::uint8_t, kGenMax>;  // bit w of rows[v]: edge {v, w}

// Smallest upper-triangle bit string over all vertex relabelings. The bits
// determined when position k is filled (adjacency to the k earlier
// positions) are packed below the earlier ones, so the running value is the
// string's most-significant prefix and comparing it against the best value's
// aligned prefix is a sound prune.
class Canonizer {
public:
    std::uint32_t run(int n, const AdjRows& rows) {
        n_ = n;
        total_bits_ = n * (n - 1) / 2;
        rows_ = &rows;
        have_best_ = false;
        best_ = 0;
        used_.fill(false);
        recurse(0, 0, 0);
        return best_;
    }

private:
    void recurse(int k, std::uint32_t prefix, int bits) {
        if (k == n_) {
            if (!have_best_ || prefix < best_) {
                best_ = prefix;
                have_best_ = true;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            std::uint32_t chunk = 0;
            for (int i = 0; i < k; ++i) {
                if ((*rows_)[perm_[i]] & (1u << v)) chunk |= 1u << i;
            }
            const std::uint32_t next = (prefix << k) | chunk;
            if (have_best_ && next > (best_ >> (total_bits_ - (bits + k)))) continue;
            perm_[k] = v;
            used_[v] = true;
            recurse(k + 1, next, bits + k);
            used_[v] = false;
        }
    }

    int n_ = 0;
    int total_bits_ = 0;
    const AdjRows* rows_ = nullptr;
    std::uint32_t best_ = 0;
    bool have_best_ = false;
    std::array<int, kGenMax> perm_{};
    std::array<bool, kGenMax> used_{};
};

bool rows_connected(int n, const AdjRows& rows) {
    std::uint8_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint8_t next = 0;
        for (int v = 0; v < n; ++v) {
            if (frontier & (1u << v)) next |= rows[v];
        }
        next &= static_cast<std::uint8_t>(~seen);
        seen |= next;
        frontier = next;
    }
    return seen == (1u << n) - 1;
}

Graph rows_to_graph(int n, const AdjRows& rows) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) {
            if (rows[v] & (1u << w)) edges.emplace_back(v + 1, w + 1);
        }
    }
    return Graph(n, std::move(edges));
}

void check_generation_bound(int max_vertices) {
    if (max_vertices < 2) {
        throw InvalidInput("exhaustive generation needs max_vertices >= 2");
    }
    if (max_vertices > kGenMax) {
        throw GuardError("exhaustive generation is limited to " +
                         std::to_string(kGenMax) + " vertices");
    }
}

}  // namespace

std::vector<Graph> connected_graphs_up_to(int max_vertices) {
    check_generation_bound(max_vertices);

    // Grow every unlabeled graph on n vertices from the unlabeled graphs on
    // n-1 by attaching one vertex with every possible neighborhood; dedup by
    // canonical form per n. Disconnected intermediates are kept: removing a
    // vertex from a connected graph may disconnect it.
    Canonizer canon;
    std::vector<AdjRows> prev{{}};  // the 1-vertex graph
    std::vector<Graph> out;

    for (int n = 2; n <= max_vertices; ++n) {
        std::unordered_set<std::uint32_t> seen;
        std::vector<AdjRows> cur;
        for (const AdjRows& g : prev) {
            for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (n - 1)); ++nb) {
                AdjRows rows = g;
                rows[n - 1] = static_cast<std::uint8_t>(nb);
                for (int v = 0; v < n - 1; ++v) {
                    if (nb & (1u << v)) rows[v] |= static_cast<std::uint8_t>(1u << (n - 1));
                }
                if (seen.insert(canon.run(n, rows)).second) {
                    cur.push_back(rows);
                    if (rows_connected(n, rows)) out.push_back(rows_to_graph(n, rows));
                }
            }
        }
        prev = std::move(cur);
    }
    return out;
}

namespace {

// Canonical form of an a x b biadjacency matrix: minimum over column
// permutations of the sorted row-mask list, packed row-major. Row order is
// free, so sorting rows realizes the best row permutation for each column
// permutation.
std::uint32_t biadjacency_canon(int a, int b, const std::array<std::uint8_t, kGenMax>& rows,
                                const std::vector<std::vector<std::uint8_t>>& remaps) {
    std::uint32_t best = UINT32_MAX;
    std::array<std::uint8_t, kGenMax> tmp{};
    for (const auto& remap : remaps) {
        for (int i = 0; i < a; ++i) tmp[i] = remap[rows[i]];
        std::sort(tmp.begin(), tmp.begin() + a);
        std::uint32_t packed = 0;
        for (int i = 0; i < a; ++i) {
            packed |= static_cast<std::uint32_t>(tmp[i]) << (i * b);
        }
        best = std::min(best, packed);
    }
    return best;
}

std::vector<std::vector<std::uint8_t>> column_perm_remaps(int b) {
    std::vector<int> perm(b);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::uint8_t>> remaps;
    do {
        std::vector<std::uint8_t> remap(std::size_t{1} << b, 0);
        for (std::uint32_t m = 0; m < remap.size(); ++m) {
            std::uint8_t x = 0;
            for (int j = 0; j < b; ++j) {
                if (m & (1u << j)) x |= static_cast<std::uint8_t>(1u << perm[j]);
            }
            remap[m] = x;
        }
        remaps.push_back(std::move(remap));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return remaps;
}

}  // namespace

std::vector<Graph> connected_bipartite_graphs_up_to(int max_vertices) {
    check_generation_bound(max_vertices);
    std::vector<Graph> out;

    for (int n = 2; n <= max_vertices; ++n) {
        for (int a = 1; a <= n / 2; ++a) {
            const int b = n - a;
            const auto remaps_b = column_perm_remaps(b);
            const std::uint32_t total = std::uint32_t{1} << (a * b);
            std::unordered_set<std::uint32_t> seen;
            for (std::uint32_t mask = 0; mask < total; ++mask) {
                std::array<std::uint8_t, kGenMax> rows{};
                std::uint8_t colcover = 0;
                bool rowzero = false;
                for (int i = 0; i < a; ++i) {
                    rows[i] = static_cast<std::uint8_t>((mask >> (i * b)) & ((1u << b) - 1));
                    if (rows[i] == 0) rowzero = true;
                    colcover |= rows[i];
                }
                if (rowzero || colcover != (1u << b) - 1) continue;

                // Connectivity over the a + b vertices.
                AdjRows adj{};
                for (int i = 0; i < a; ++i) {
                    for (int j = 0; j < b; ++j) {
                        if (rows[i] & (1u << j)) {
                            adj[i] |= static_cast<std::uint8_t>(1u << (a + j));
                            adj[a + j] |= static_cast<std::uint8_t>(1u << i);
                        }
                    }
                }
                if (!rows_connected(n, adj)) continue;

                std::uint32_t canon = biadjacency_canon(a, b, rows, remaps_b);
                if (a == b) {
                    // Part swap: canonize the transpose as well.
                    std::array<std::uint8_t, kGenMax> t{};
                    for (int i = 0; i < a; ++i) {
                        for (int j = 0; j < b; ++j) {
                            if (rows[i] & (1u << j)) t[j] |= static_cast<std::uint8_t>(1u << i);
                        }
                    }
                    canon = std::min(canon, biadjacency_canon(b, a, t, remaps_b));
                }
                if (seen.insert(canon).second) out.push_back(rows_to_graph(n, adj));
            }
        }
    }
    return out;
}

Graph random_connected_graph(PortableRng& rng, const RandomGraphOptions& opts) {
    if (opts.min_vertices < 2 || opts.max_vertices < opts.min_vertices) {
        throw InvalidInput("random_connected_graph: bad vertex range");
    }
    static constexpr int kTenths[3] = {3, 5, 7};
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        const int n = rng.int_in(opts.min_vertices, opts.max_vertices);
        const int p10 = kTenths[rng.below(3)];
        std::vector<Edge> edges;
        if (opts.bipartite) {
            const int a = rng.int_in(1, n - 1);
            for (int i = 1; i <= a; ++i) {
                for (int j = a + 1; j <= n; ++j) {
                    if (static_cast<int>(rng.below(10)) < p10) edges.emplace_back(i, j);
                }
            }
        } else {
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    if (static_cast<int>(rng.below(10)) < p10) edges.emplace_back(i, j);
                }
            }
        }
        VertexSet covered = 0;
        for (const Edge& e : edges) covered |= vertex_bit(e.u) | vertex_bit(e.v);
        if (covered != full_vertex_set(n)) continue;
        Graph g(n, std::move(edges));
        if (is_connected(g)) return g;
    }
    throw GuardError("random_connected_graph: no connected sample within the "
                     "attempt budget");
}

std::optional<Graph> random_regular_graph(PortableRng& rng, int n, int k, int attempts) {
    if (n < 2 || k < 1 || k >= n || (n * k) % 2 != 0) return std::nullopt;
    std::vector<int> stubs;
    stubs.reserve(n * k);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        stubs.clear();
        for (int v = 1; v <= n; ++v) {
            for (int i = 0; i < k; ++i) stubs.push_back(v);
        }
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            std::size_t j = rng.below(i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        std::vector<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            if (stubs[i] == stubs[i + 1]) {
                simple = false;
                break;
            }
            Edge e(stubs[i], stubs[i + 1]);
            for (const Edge& seen : edges) {
                if (seen == e) {
                    simple = false;
                    break;
                }
            }
            if (simple) edges.push_back(e);
        }
        if (!simple) continue;
        Graph g(n, std::move(edges));
        if (is_connected(g)) return g;
    }
    return std::nullopt;
}

}  // namespace edgering
