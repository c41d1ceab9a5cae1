#include "edgering/hilbert.hpp"

#include <numeric>
#include <string>

#include "edgering/cycles.hpp"

namespace edgering {

namespace {

std::int64_t checked(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw InternalError(std::string(what) + ": value exceeds 64-bit integers");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw InvalidInput("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        r = r * (n - i);
        r /= (i + 1);
        checked(r, "binomial");
    }
    return static_cast<std::int64_t>(r);
}

std::int64_t binomial_integer(std::int64_t a, std::int64_t k) {
    if (k < 0) return 0;
    if (a >= 0) return binomial(a, k);
    // C(a, k) = (-1)^k C(k - a - 1, k) for a < 0.
    std::int64_t v = binomial(k - a - 1, k);
    return (k % 2 == 0) ? v : -v;
}

std::vector<std::int64_t> poly_mul(std::span<const std::int64_t> a,
                                   std::span<const std::int64_t> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = checked(static_cast<__int128>(out[i + j]) +
                                     static_cast<__int128>(a[i]) * b[j],
                                 "poly_mul");
        }
    }
    return out;
}

std::vector<std::int64_t> hilbert_function(const Graph& g, int upto, const Guards& guards) {
    if (upto < 0) throw InvalidInput("hilbert_function: negative bound");
    EdgePolytope p = EdgePolytope::build(g, guards);
    SemigroupLevels levels(p, guards);
    std::vector<std::int64_t> out;
    out.reserve(upto + 1);
    for (int k = 0; k <= upto; ++k) {
        out.push_back(static_cast<std::int64_t>(levels.level(k).size()));
    }
    return out;
}

namespace {

// Numerator coefficients of the Hilbert series over (1-t)^dim:
// N_i = sum_{j<=i} (-1)^(i-j) C(dim, i-j) H(j).
std::vector<std::int64_t> series_numerator(std::span<const std::int64_t> hvals, int dim) {
    std::vector<std::int64_t> n(hvals.size());
    for (std::size_t i = 0; i < hvals.size(); ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j <= i; ++j) {
            std::int64_t c = binomial(dim, static_cast<std::int64_t>(i - j));
            __int128 term = static_cast<__int128>(c) * hvals[j];
            acc += ((i - j) % 2 == 0) ? term : -term;
        }
        n[i] = checked(acc, "series numerator");
    }
    return n;
}

}  // namespace

HilbertSummary hilbert_summary(const Graph& g, const Guards& guards) {
    return hilbert_summary(EdgePolytope::build(g, guards), guards);
}

HilbertSummary hilbert_summary(const EdgePolytope& p, const Guards& guards) {
    const Graph& g = p.graph();
    HilbertSummary out;
    out.krull_dim = p.krull_dim();
    out.polytope_dim = p.polytope_dim();
    out.ell = ell(p, guards);
    out.cohen_macaulay = odd_cycle_condition(g, guards);

    SemigroupLevels levels(p, guards);

    if (out.cohen_macaulay) {
        // Normal ring: the canonical module starts in degree ell, so the
        // socle degree is krull_dim - ell and H(0..s+1) determines the
        // numerator.
        const int s = out.krull_dim - out.ell;
        if (s < 0) throw InternalError("hilbert_summary: negative socle degree");
        for (int k = 0; k <= s + 1; ++k) {
            out.hilbert_values.push_back(static_cast<std::int64_t>(levels.level(k).size()));
        }
        std::vector<std::int64_t> n = series_numerator(out.hilbert_values, out.krull_dim);
        if (n[0] != 1) throw InternalError("hilbert_summary: h_0 != 1");
        if (n[s] == 0) throw InternalError("hilbert_summary: vanishing top coefficient");
        if (n[s + 1] != 0) {
            throw InternalError("hilbert_summary: numerator does not truncate at the "
                                "expected socle degree");
        }
        for (int i = 0; i <= s; ++i) {
            if (n[i] < 0) {
                throw InternalError("hilbert_summary: negative h-vector entry for a "
                                    "normal ring");
            }
        }
        out.h_vector.assign(n.begin(), n.begin() + s + 1);
        out.socle_degree = s;
        out.a_invariant = s - out.krull_dim;

        // Re-derive H(s+1) from the truncated numerator; this is the
        // binomial-expansion identity for the Ehrhart polynomial.
        std::int64_t expected =
            ehrhart_value(out.h_vector, out.polytope_dim, s + 1);
        if (expected != out.hilbert_values[s + 1]) {
            throw InternalError("hilbert_summary: numerator fails to reproduce the "
                                "Hilbert function");
        }
        return out;
    }

    // Non-normal ring: the numerator degree is unknown a priori. Extend the
    // finite-difference transform until it stabilizes, within 2*krull_dim,
    // verifying two extra zero coefficients past the last nonzero one.
    const int cap = 2 * out.krull_dim;
    std::vector<std::int64_t> hvals;
    for (int k = 0; k <= cap + 2; ++k) {
        hvals.push_back(static_cast<std::int64_t>(levels.level(k).size()));
    }
    std::vector<std::int64_t> n = series_numerator(hvals, out.krull_dim);
    int last = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] != 0) last = static_cast<int>(i);
    }
    if (last > cap) {
        throw GuardError("hilbert_summary: series numerator did not stabilize "
                         "within twice the Krull dimension");
    }
    if (n[0] != 1) throw InternalError("hilbert_summary: h_0 != 1");
    out.h_vector.assign(n.begin(), n.begin() + last + 1);
    out.hilbert_values = std::move(hvals);
    out.socle_degree = last;
    out.a_invariant = last - out.krull_dim;
    return out;
}

std::int64_t e_tilde(std::span<const std::int64_t> h) {
    if (h.empty()) throw InvalidInput("e_tilde: empty h-vector");
    const std::size_t s = h.size() - 1;
    __int128 total = 0;
    __int128 head = 0, tail = 0;
    for (std::size_t j = 0; j + 1 <= s; ++j) {
        tail += h[s - j];
        head += h[j];
        total += tail - head;
    }
    return checked(total, "e_tilde");
}

std::int64_t ehrhart_value(std::span<const std::int64_t> h, int delta, std::int64_t k) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < h.size(); ++j) {
        acc += static_cast<__int128>(h[j]) *
               binomial_integer(k + delta - static_cast<std::int64_t>(j), delta);
    }
    return checked(acc, "ehrhart_value");
}

std::vector<Rational> EhrhartPolynomial::coefficients() const {
    std::vector<Rational> out;
    out.reserve(scaled_coefficients.size());
    for (std::int64_t c : scaled_coefficients) {
        std::int64_t g = std::gcd(c < 0 ? -c : c, denominator);
        if (g == 0) g = 1;
        out.push_back({c / g, denominator / g});
    }
    return out;
}

std::int64_t EhrhartPolynomial::evaluate(std::int64_t k) const {
    __int128 acc = 0;
    for (std::size_t i = scaled_coefficients.size(); i-- > 0;) {
        acc = acc * k + scaled_coefficients[i];
    }
    if (acc % denominator != 0) {
        throw InternalError("ehrhart evaluate: non-integer value");
    }
    return checked(acc / denominator, "ehrhart evaluate");
}

EhrhartPolynomial ehrhart_polynomial(const HilbertSummary& summary) {
    const int delta = summary.polytope_dim;
    EhrhartPolynomial out;
    out.scaled_coefficients.assign(delta + 1, 0);
    out.denominator = 1;
    for (int i = 2; i <= delta; ++i) {
        out.denominator = checked(static_cast<__int128>(out.denominator) * i,
                                  "ehrhart denominator");
    }
    for (std::size_t j = 0; j < summary.h_vector.size(); ++j) {
        // h_j * (k + delta - j)(k + delta - j - 1) ... (k + 1 - j), expanded.
        std::vector<std::int64_t> term{1};
        for (int i = 0; i < delta; ++i) {
            std::int64_t shift = delta - static_cast<std::int64_t>(j) - i;
            term = poly_mul(term, std::vector<std::int64_t>{shift, 1});
        }
        for (int i = 0; i <= delta; ++i) {
            __int128 add = static_cast<__int128>(term[i]) * summary.h_vector[j];
            out.scaled_coefficients[i] =
                checked(add + out.scaled_coefficients[i], "ehrhart coefficient");
        }
    }
    return out;
}

}  // namespace edgering
