#include "edgering/matching.hpp"

#include <string>
#include <vector>

namespace edgering {

namespace {

// matchable[m] = 1 iff the vertices of mask m can be perfectly matched using
// edges inside m. Memoized over all masks; -1 marks unknown.
class MatchTable {
public:
    explicit MatchTable(const Graph& g) : g_(g), memo_(std::size_t{1} << g.vertex_count(), -1) {
        memo_[0] = 1;
    }

    bool matchable(VertexSet m) {
        signed char& slot = memo_[m];
        if (slot != -1) return slot != 0;
        // Match the lowest vertex of m with each neighbor inside m.
        int v = std::countr_zero(m) + 1;
        bool ok = false;
        for (int w : set_vertices(g_.adjacency(v) & m)) {
            if (matchable(m & ~vertex_bit(v) & ~vertex_bit(w))) {
                ok = true;
                break;
            }
        }
        slot = ok ? 1 : 0;
        return ok;
    }

private:
    const Graph& g_;
    std::vector<signed char> memo_;
};

void check_guard(const Graph& g, const Guards& guards, const char* op) {
    if (g.vertex_count() > guards.max_cone_vertices) {
        throw GuardError(std::string(op) + " is guarded at " +
                         std::to_string(guards.max_cone_vertices) +
                         " vertices, got " + std::to_string(g.vertex_count()));
    }
}

}  // namespace

bool has_perfect_matching(const Graph& g, const Guards& guards) {
    check_guard(g, guards, "perfect-matching search");
    if (g.vertex_count() % 2 != 0) return false;
    MatchTable table(g);
    return table.matchable(g.vertex_set());
}

bool is_matching_covered(const Graph& g, const Guards& guards) {
    check_guard(g, guards, "matching-covered test");
    if (!is_connected(g)) return false;
    if (g.vertex_count() % 2 != 0) return false;
    MatchTable table(g);
    for (const Edge& e : g.edges()) {
        if (!table.matchable(g.vertex_set() & ~vertex_bit(e.u) & ~vertex_bit(e.v))) {
            return false;
        }
    }
    return true;
}

}  // namespace edgering
