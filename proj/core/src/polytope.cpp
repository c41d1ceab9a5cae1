#include "edgering/polytope.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_set>

namespace edgering {

LatticePoint::LatticePoint(int dimension) : dim_(static_cast<std::uint8_t>(dimension)) {
    if (dimension < 1 || dimension > kMaxConeVertices) {
        throw InvalidInput("lattice point dimension out of range");
    }
}

LatticePoint LatticePoint::from_coords(const std::vector<int>& coords) {
    LatticePoint p(static_cast<int>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0 || coords[i] > 255) {
            throw InvalidInput("lattice point coordinate out of range");
        }
        p.c_[i] = static_cast<std::uint8_t>(coords[i]);
    }
    return p;
}

int LatticePoint::coordinate_sum() const {
    int s = 0;
    for (int i = 0; i < dim_; ++i) s += c_[i];
    return s;
}

LatticePoint LatticePoint::operator+(const LatticePoint& o) const {
    LatticePoint r(dim_);
    for (int i = 0; i < dim_; ++i) {
        r.c_[i] = static_cast<std::uint8_t>(c_[i] + o.c_[i]);
    }
    return r;
}

bool LatticePoint::try_minus(const LatticePoint& o, LatticePoint& out) const {
    out = LatticePoint(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (c_[i] < o.c_[i]) return false;
        out.c_[i] = static_cast<std::uint8_t>(c_[i] - o.c_[i]);
    }
    return true;
}

std::vector<int> LatticePoint::coords() const {
    std::vector<int> out(dim_);
    for (int i = 0; i < dim_; ++i) out[i] = c_[i];
    return out;
}

std::pair<std::uint64_t, std::uint64_t> LatticePoint::packed() const {
    std::uint64_t a = 0, b = 0;
    std::memcpy(&a, c_.data(), 8);
    std::memcpy(&b, c_.data() + 8, 8);
    return {a, b ^ (std::uint64_t{dim_} << 56)};
}

std::int64_t Halfspace::evaluate(const LatticePoint& p) const {
    std::int64_t v = 0;
    for (int i = 0; i < p.dimension(); ++i) {
        v += static_cast<std::int64_t>(coeff[i]) * p.coord(i + 1);
    }
    return v;
}

bool ConeSystem::contains(const LatticePoint& p) const {
    if (p.dimension() != d_) {
        throw InvalidInput("cone membership: vector length mismatch");
    }
    for (const Halfspace& h : halfspaces_) {
        if (h.evaluate(p) < 0) return false;
    }
    return true;
}

bool ConeSystem::strictly_contains(const LatticePoint& p) const {
    if (p.dimension() != d_) {
        throw InvalidInput("cone membership: vector length mismatch");
    }
    for (const Halfspace& h : halfspaces_) {
        std::int64_t v = h.evaluate(p);
        if (h.implicit_equality ? v != 0 : v <= 0) return false;
    }
    return true;
}

namespace {

void check_cone_guard(const Graph& g, const Guards& guards) {
    int limit = std::min(guards.max_cone_vertices, kMaxConeVertices);
    if (g.vertex_count() > limit) {
        throw GuardError("cone operations are guarded at " + std::to_string(limit) +
                         " vertices, got " + std::to_string(g.vertex_count()));
    }
}

std::vector<LatticePoint> edge_generators(const Graph& g) {
    std::vector<LatticePoint> gens;
    gens.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        LatticePoint p(g.vertex_count());
        p.set_coord(e.u, 1);
        p.set_coord(e.v, 1);
        gens.push_back(p);
    }
    return gens;
}

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
int integer_rank(std::vector<std::vector<std::int64_t>> m, int cols) {
    int rank = 0;
    std::int64_t prev_pivot = 1;
    const int rows = static_cast<int>(m.size());
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot_row = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][col] != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) continue;
        std::swap(m[rank], m[pivot_row]);
        const std::int64_t pivot = m[rank][col];
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                m[r][c] = (m[r][c] * pivot - m[rank][c] * m[r][col]) / prev_pivot;
            }
            m[r][col] = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace

ConeSystem build_cone(const Graph& g, const Guards& guards) {
    check_cone_guard(g, guards);
    if (!is_connected(g)) {
        throw InvalidInput("build_cone: graph must be connected");
    }
    const int d = g.vertex_count();
    std::vector<LatticePoint> gens = edge_generators(g);
    std::vector<Halfspace> hs;

    for (int v = 1; v <= d; ++v) {
        Halfspace h;
        h.kind = Halfspace::Kind::coordinate;
        h.vertex = v;
        h.coeff[v - 1] = 1;
        h.implicit_equality = false;  // no isolated vertices
        hs.push_back(h);
    }
    for (VertexSet t : independent_sets(g, guards)) {
        Halfspace h;
        h.kind = Halfspace::Kind::independent_set;
        h.tset = t;
        h.nset = neighborhood(g, t);
        for (int v : set_vertices(h.nset)) h.coeff[v - 1] = 1;
        for (int v : set_vertices(t)) h.coeff[v - 1] = -1;
        h.implicit_equality = true;
        for (const LatticePoint& gen : gens) {
            if (h.evaluate(gen) != 0) {
                h.implicit_equality = false;
                break;
            }
        }
        hs.push_back(h);
    }
    return ConeSystem(d, std::move(hs));
}

EdgePolytope EdgePolytope::build(const Graph& g, const Guards& guards) {
    ConeSystem cone = build_cone(g, guards);
    std::vector<LatticePoint> gens = edge_generators(g);

    const int d = g.vertex_count();
    const int b = is_bipartite(g) ? 1 : 0;

    std::vector<std::vector<std::int64_t>> m;
    m.reserve(gens.size());
    for (const LatticePoint& gen : gens) {
        std::vector<std::int64_t> row(d);
        for (int v = 1; v <= d; ++v) row[v - 1] = gen.coord(v);
        m.push_back(std::move(row));
    }
    if (integer_rank(std::move(m), d) != d - b) {
        throw InternalError("edge polytope: generator span has unexpected rank");
    }

    return EdgePolytope(g, std::move(gens), std::move(cone), d - b - 1, d - b);
}

namespace {

// Recursive coordinate assignment over one degree slice of the cone, with
// running halfspace values and suffix-sign pruning. Coordinate inequalities
// are enforced by the loop bounds; only independent-set halfspaces are
// carried in the pruning tables.
class SliceEnumerator {
public:
    SliceEnumerator(const EdgePolytope& p, int k, bool interior,
                    const Guards& guards, bool stop_after_first)
        : d_(p.graph().vertex_count()),
          target_(2 * k),
          interior_(interior),
          stop_after_first_(stop_after_first),
          max_points_(guards.max_level_points),
          current_(d_) {
        for (const Halfspace& h : p.cone().halfspaces()) {
            if (h.kind == Halfspace::Kind::independent_set) hs_.push_back(&h);
        }
        const int n = static_cast<int>(hs_.size());
        partial_.assign(n, 0);
        pos_after_.assign(n, {});
        neg_after_.assign(n, {});
        for (int i = 0; i < n; ++i) {
            bool pos = false, neg = false;
            for (int v = d_; v >= 0; --v) {
                pos_after_[i][v] = pos;
                neg_after_[i][v] = neg;
                if (v > 0) {
                    if (hs_[i]->coeff[v - 1] > 0) pos = true;
                    if (hs_[i]->coeff[v - 1] < 0) neg = true;
                }
            }
        }
    }

    std::vector<LatticePoint> run() {
        out_.clear();
        found_ = false;
        if (target_ == 0) {
            // Degree 0: only the origin, which is interior only in the
            // degenerate sense never used here.
            if (!interior_) out_.push_back(LatticePoint(d_));
            return std::move(out_);
        }
        recurse(1, target_);
        return std::move(out_);
    }

private:
    bool pruned(int v, int remaining) const {
        for (std::size_t i = 0; i < hs_.size(); ++i) {
            std::int64_t hi = partial_[i] + (pos_after_[i][v] ? remaining : 0);
            std::int64_t lo = partial_[i] - (neg_after_[i][v] ? remaining : 0);
            if (hs_[i]->implicit_equality) {
                if (hi < 0 || lo > 0) return true;
            } else if (interior_) {
                if (hi < 1) return true;
            } else {
                if (hi < 0) return true;
            }
        }
        return false;
    }

    void add_value(int v, int t) {
        for (std::size_t i = 0; i < hs_.size(); ++i) {
            partial_[i] += static_cast<std::int64_t>(hs_[i]->coeff[v - 1]) * t;
        }
    }

    void recurse(int v, int remaining) {
        if (found_ && stop_after_first_) return;
        const int lo = interior_ ? 1 : 0;
        if (v == d_) {
            if (remaining < lo) return;
            current_.set_coord(v, remaining);
            add_value(v, remaining);
            if (!pruned(v, 0)) emit();
            add_value(v, -remaining);
            current_.set_coord(v, 0);
            return;
        }
        const int hi = remaining - lo * (d_ - v);
        if (hi < lo) return;
        current_.set_coord(v, lo);
        add_value(v, lo);
        for (int t = lo; t <= hi; ++t) {
            if (t > lo) {
                current_.set_coord(v, t);
                add_value(v, 1);
            }
            if (!pruned(v, remaining - t)) recurse(v + 1, remaining - t);
            if (found_ && stop_after_first_) break;
        }
        add_value(v, -current_.coord(v));
        current_.set_coord(v, 0);
    }

    void emit() {
        found_ = true;
        if (static_cast<std::int64_t>(out_.size()) >= max_points_) {
            throw GuardError("lattice enumeration exceeded the per-level point guard");
        }
        out_.push_back(current_);
    }

    int d_;
    int target_;
    bool interior_;
    bool stop_after_first_;
    std::int64_t max_points_;
    LatticePoint current_;
    std::vector<const Halfspace*> hs_;
    std::vector<std::int64_t> partial_;
    std::vector<std::array<bool, kMaxConeVertices + 1>> pos_after_, neg_after_;
    std::vector<LatticePoint> out_;
    bool found_ = false;
};

void check_dilate_guard(int k, const Guards& guards) {
    if (k < 0) throw InvalidInput("dilation factor must be non-negative");
    // Coordinates are stored in 8 bits; 127 bounds the coordinate sum 2k.
    int limit = std::min(guards.max_dilate, 127);
    if (k > limit) {
        throw GuardError("dilation " + std::to_string(k) + " exceeds the guard of " +
                         std::to_string(limit));
    }
}

}  // namespace

std::vector<LatticePoint> dilate_points(const EdgePolytope& p, int k, const Guards& guards) {
    check_dilate_guard(k, guards);
    return SliceEnumerator(p, k, /*interior=*/false, guards, false).run();
}

std::vector<LatticePoint> interior_points(const EdgePolytope& p, int k, const Guards& guards) {
    check_dilate_guard(k, guards);
    if (k < 1) throw InvalidInput("interior_points: dilation must be positive");
    return SliceEnumerator(p, k, /*interior=*/true, guards, false).run();
}

int ell(const EdgePolytope& p, const Guards& guards) {
    for (int k = 1; k <= p.krull_dim() + 1; ++k) {
        check_dilate_guard(k, guards);
        if (!SliceEnumerator(p, k, true, guards, /*stop_after_first=*/true).run().empty()) {
            return k;
        }
    }
    throw InternalError("ell: no interior lattice point up to krull_dim + 1");
}

SemigroupLevels::SemigroupLevels(const EdgePolytope& p, const Guards& guards)
    : poly_(&p), guards_(guards) {
    levels_.push_back({LatticePoint(p.graph().vertex_count())});
}

const std::vector<LatticePoint>& SemigroupLevels::level(int k) {
    check_dilate_guard(k, guards_);
    while (static_cast<int>(levels_.size()) <= k) {
        const std::vector<LatticePoint>& prev = levels_.back();
        std::unordered_set<LatticePoint, LatticePointHash> next;
        next.reserve(prev.size() * 2);
        for (const LatticePoint& q : prev) {
            for (const LatticePoint& gen : poly_->generators()) {
                next.insert(q + gen);
            }
        }
        if (static_cast<std::int64_t>(next.size()) > guards_.max_level_points) {
            throw GuardError("sumset level exceeded the per-level point guard");
        }
        std::vector<LatticePoint> sorted(next.begin(), next.end());
        std::sort(sorted.begin(), sorted.end());
        levels_.push_back(std::move(sorted));
    }
    return levels_[k];
}

std::vector<LatticePoint> semigroup_points(const EdgePolytope& p, int k, const Guards& guards) {
    SemigroupLevels levels(p, guards);
    return levels.level(k);
}

}  // namespace edgering
