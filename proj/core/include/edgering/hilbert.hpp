#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgering/polytope.hpp"

namespace edgering {

// Exact binomial coefficient C(n, k) for n >= 0. Throws InternalError on
// 64-bit overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// C(a, k) for any integer a (the integer-valued polynomial in a), exact.
std::int64_t binomial_integer(std::int64_t a, std::int64_t k);

// Dense polynomial product over 64-bit integers.
std::vector<std::int64_t> poly_mul(std::span<const std::int64_t> a,
                                   std::span<const std::int64_t> b);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

// Hilbert function, Hilbert-series numerator and the derived invariants of
// the edge ring of a connected graph.
//
// When the graph satisfies the odd cycle condition the ring is normal, hence
// Cohen-Macaulay, and h_vector is the genuine h-vector with socle_degree =
// krull_dim - ell. Otherwise h_vector is the formal numerator of the Hilbert
// series, found by extending the finite-difference transform until it
// stabilizes, and cohen_macaulay is false.
struct HilbertSummary {
    int krull_dim = 0;
    int polytope_dim = 0;
    int ell = 0;
    int socle_degree = 0;
    int a_invariant = 0;
    bool cohen_macaulay = true;
    std::vector<std::int64_t> hilbert_values;  // H(0..socle_degree + 1)
    std::vector<std::int64_t> h_vector;
};

// H(k) = number of degree-k monomials of the edge ring, for k = 0..K.
// Exact for every connected graph, normal or not.
std::vector<std::int64_t> hilbert_function(const Graph& g, int upto,
                                           const Guards& guards = default_guards());

HilbertSummary hilbert_summary(const Graph& g, const Guards& guards = default_guards());
HilbertSummary hilbert_summary(const EdgePolytope& p, const Guards& guards = default_guards());

// The partial-sum defect sum_{j=0}^{s-1} [(h_s+...+h_{s-j}) - (h_0+...+h_j)].
std::int64_t e_tilde(std::span<const std::int64_t> h);

// Value of h_0 C(k+delta, delta) + h_1 C(k+delta-1, delta) + ... at any
// integer k, exact. For k >= 0 this is the Ehrhart polynomial of the edge
// polytope when the ring is normal.
std::int64_t ehrhart_value(std::span<const std::int64_t> h, int delta, std::int64_t k);

// The same polynomial expanded into monomial coefficients.
struct EhrhartPolynomial {
    std::vector<std::int64_t> scaled_coefficients;  // coefficient of k^i, times denominator
    std::int64_t denominator = 1;                   // delta!

    std::vector<Rational> coefficients() const;  // reduced per-term view
    std::int64_t evaluate(std::int64_t k) const;
};

EhrhartPolynomial ehrhart_polynomial(const HilbertSummary& summary);

}  // namespace edgering
