#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/guards.hpp"

namespace edgering {

// Cone and lattice enumeration work in exact integer arithmetic and are
// limited to this many vertices (coordinates).
inline constexpr int kMaxConeVertices = 16;

// A non-negative integer vector indexed by the vertices 1..d. Points of the
// k-th dilate of an edge polytope have coordinate sum 2k.
class LatticePoint {
public:
    LatticePoint() : dim_(0) {}
    explicit LatticePoint(int dimension);
    static LatticePoint from_coords(const std::vector<int>& coords);

    int dimension() const noexcept { return dim_; }
    int coord(int v) const { return c_[v - 1]; }
    void set_coord(int v, int value) { c_[v - 1] = static_cast<std::uint8_t>(value); }

    int coordinate_sum() const;
    // coordinate_sum() / 2; the sum of any point of a dilate is even.
    int degree() const { return coordinate_sum() / 2; }

    LatticePoint operator+(const LatticePoint& o) const;
    // Coordinate-wise difference, or false if any coordinate would go negative.
    bool try_minus(const LatticePoint& o, LatticePoint& out) const;

    std::vector<int> coords() const;

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }
    friend auto operator<=>(const LatticePoint& a, const LatticePoint& b) {
        if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
        return a.c_ <=> b.c_;
    }

    // Packed 128-bit view for hashing.
    std::pair<std::uint64_t, std::uint64_t> packed() const;

private:
    std::array<std::uint8_t, kMaxConeVertices> c_{};
    std::uint8_t dim_;
};

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& p) const noexcept {
        auto [a, b] = p.packed();
        std::uint64_t h = a * 0x9e3779b97f4a7c15ULL;
        h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// One closed halfspace of the cone's H-description: either a coordinate
// inequality x_v >= 0 or, for an independent set T, the inequality
// sum_{j in N(T)} x_j - sum_{i in T} x_i >= 0. A halfspace is an implicit
// equality when every generator satisfies it with equality; the whole cone
// then lies in its bounding hyperplane.
struct Halfspace {
    enum class Kind { coordinate, independent_set };

    Kind kind = Kind::coordinate;
    int vertex = 0;                 // coordinate kind
    VertexSet tset = 0, nset = 0;   // independent-set kind
    std::array<std::int8_t, kMaxConeVertices> coeff{};
    bool implicit_equality = false;

    std::int64_t evaluate(const LatticePoint& p) const;
};

// H-description of the cone spanned by the edge generators.
class ConeSystem {
public:
    ConeSystem() = default;
    ConeSystem(int dimension, std::vector<Halfspace> halfspaces)
        : d_(dimension), halfspaces_(std::move(halfspaces)) {}

    int dimension() const noexcept { return d_; }
    const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }

    // All inequalities hold (>= 0). By the cone's facet description this is
    // exact membership.
    bool contains(const LatticePoint& p) const;

    // Relative interior: strict inequality on every non-implicit halfspace
    // and equality on every implicit one.
    bool strictly_contains(const LatticePoint& p) const;

private:
    int d_ = 0;
    std::vector<Halfspace> halfspaces_;
};

ConeSystem build_cone(const Graph& g, const Guards& guards = default_guards());

// The edge polytope: convex hull of the generators rho(e) = e_u + e_v over
// the edges of a connected graph, together with the cone's H-description.
class EdgePolytope {
public:
    static EdgePolytope build(const Graph& g, const Guards& guards = default_guards());

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<LatticePoint>& generators() const noexcept { return generators_; }
    const ConeSystem& cone() const noexcept { return cone_; }
    int polytope_dim() const noexcept { return polytope_dim_; }
    int krull_dim() const noexcept { return krull_dim_; }

private:
    EdgePolytope(Graph g, std::vector<LatticePoint> gens, ConeSystem cone,
                 int polytope_dim, int krull_dim)
        : graph_(std::move(g)),
          generators_(std::move(gens)),
          cone_(std::move(cone)),
          polytope_dim_(polytope_dim),
          krull_dim_(krull_dim) {}

    Graph graph_;
    std::vector<LatticePoint> generators_;
    ConeSystem cone_;
    int polytope_dim_;
    int krull_dim_;
};

// Lattice points of the k-th dilate: coordinate sum 2k and inside the cone.
// Lexicographically sorted.
std::vector<LatticePoint> dilate_points(const EdgePolytope& p, int k,
                                        const Guards& guards = default_guards());

// Lattice points in the relative interior of the k-th dilate.
std::vector<LatticePoint> interior_points(const EdgePolytope& p, int k,
                                          const Guards& guards = default_guards());

// Smallest k >= 1 whose dilate has an interior lattice point. Searches up to
// krull_dim + 1 and reports an internal error beyond.
int ell(const EdgePolytope& p, const Guards& guards = default_guards());

// All sums of exactly k generators, via iterated sumsets. Equals the set of
// degree-k monomial exponents of the edge ring for every graph, normal or
// not. Lexicographically sorted.
std::vector<LatticePoint> semigroup_points(const EdgePolytope& p, int k,
                                           const Guards& guards = default_guards());

// Incremental sumset levels, for callers that need several consecutive k.
class SemigroupLevels {
public:
    explicit SemigroupLevels(const EdgePolytope& p, const Guards& guards = default_guards());

    const std::vector<LatticePoint>& level(int k);

private:
    const EdgePolytope* poly_;
    Guards guards_;
    std::vector<std::vector<LatticePoint>> levels_;
};

}  // namespace edgering
