#pragma once

#include "ihrep/basis_cache.hpp"
#include "ihrep/graded_poly.hpp"
#include "ihrep/rational.hpp"
#include "ihrep/series.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ihrep {

/// Raised when a closed-form computation produces something that cannot be a
/// dimension series (negative, fractional, or non-polynomial where one is required).
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default truncation order for genus-g series: top IH degree 6g-6 plus slack.
inline std::size_t default_order(unsigned g) { return 6 * std::size_t{g} + 24; }

/// Genus cap for checks that need Groebner bases of I_0..I_g.
inline constexpr unsigned kGroebnerGenusCap = 4;

// --- closed forms --------------------------------------------------------------

/// ((1+t^3)^{2g} - t^{2g+2}(1+t)^{2g}) / ((1-t^2)(1-t^4)).
RationalFunctionT equivariant_rational_function(unsigned g);
TruncatedSeries equivariant_series_closed(unsigned g, std::size_t order);

/// 1/2 { (1+t)^{2g} t^{2g-2} / (1-t^2) + (1-t)^{2g} (-t^2)^{g-1} / (1+t^2) }.
/// Throws ComputationError on a negative or non-integer coefficient.
TruncatedSeries correction_series(unsigned g, std::size_t order);

enum class Route { closed_form, structural };
std::string to_string(Route route);

/// Intersection Betti numbers in degrees 0..6g-6.
struct BettiTable {
    unsigned genus = 0;
    std::vector<std::uint64_t> coefficients;
    Route route = Route::closed_form;

    std::size_t top_degree() const { return 6 * std::size_t{genus} - 6; }
    bool is_palindromic() const;
    std::uint64_t total_dimension() const;
};

/// equivariant_series_closed - correction_series at `order` (>= 6g-6); throws
/// ComputationError unless the difference is a nonnegative integer polynomial
/// of degree <= 6g-6.
BettiTable ip_series_closed(unsigned g, std::size_t order);
inline BettiTable ip_series_closed(unsigned g) { return ip_series_closed(g, default_order(g)); }

// --- t / tanh t ----------------------------------------------------------------

/// b_0..b_K with t/tanh t = sum_k b_k t^{2k}, as cosh(t) divided by sinh(t)/t.
std::vector<Rational> b_coefficients(unsigned K);
/// The series t/tanh t through t^{2K}.
TruncatedSeries t_over_tanh_series(unsigned K);

// --- E_m -----------------------------------------------------------------------

/// alpha^i beta^j xi^k
struct EMonomial {
    unsigned i = 0;
    unsigned j = 0;
    unsigned k = 0;

    unsigned degree() const { return 2 * i + 4 * j + 6 * k; }
    friend bool operator==(const EMonomial&, const EMonomial&) = default;
};

/// All (i,j,k) with i+2k <= m, j+2k <= m, and j < floor(m/2) when k = 0,
/// sorted by (degree, i, j, k).
std::vector<EMonomial> e_basis(unsigned m);
/// Degree generating polynomial of e_basis(m), as a series of order 6m.
TruncatedSeries e_hilbert(unsigned m);

/// sum_l prim_dimension_formula(g,l) t^{3l} e_hilbert(g-l).
BettiTable ih_series_structural(unsigned g);

/// sum_l prim_dimension_formula(g,l) t^{3l} Hilbert(Q[alpha,beta,gamma]/I_{g-l}).
TruncatedSeries equivariant_series_structural(unsigned g, std::size_t order, BasisCache& cache);
inline TruncatedSeries equivariant_series_structural(unsigned g, std::size_t order) {
    return equivariant_series_structural(g, order, BasisCache::shared());
}

struct IndependenceVerdict {
    unsigned m = 0;
    std::size_t size = 0;
    std::size_t rank = 0;
    /// First degree whose normal forms are dependent, with a dependency vector
    /// over the E_m monomials of that degree.
    std::optional<unsigned> failing_degree;
    std::vector<Rational> dependency;

    bool passed() const { return !failing_degree && rank == size; }
};

/// Normal forms of E_m monomials modulo I_m are linearly independent.
/// Requires m <= max_m (a cost guard).
IndependenceVerdict e_basis_independence(unsigned m, BasisCache& cache, unsigned max_m = kGroebnerGenusCap);
inline IndependenceVerdict e_basis_independence(unsigned m) {
    return e_basis_independence(m, BasisCache::shared());
}

// --- top degree and pairing ----------------------------------------------------

/// alpha^{g-2} beta^{g-2} xi / ((g-2)! (-4)^{g-1}).
GradedPoly fundamental_class(unsigned g);

struct TopIdentityEntry {
    unsigned m = 0;
    unsigned n = 0;
    /// -m! b_{g-n-1} / (g-2)!
    Rational predicted_coefficient;
    /// Normal form of alpha^m beta^n + m! b_{g-n-1} alpha^{g-2} beta^{g-2} xi / (g-2)!.
    GradedPoly residual;
    /// c with NF(alpha^m beta^n) = c NF(alpha^{g-2} beta^{g-2} xi), when such c exists.
    std::optional<Rational> ring_coefficient;
    /// ring_coefficient (g-2)! (-4)^{g-1}: the pairing read off the ring.
    std::optional<Rational> ring_pairing;
    Rational formula_pairing;

    bool passed() const { return residual.is_zero(); }
    bool pairing_consistent() const { return ring_pairing && *ring_pairing == formula_pairing; }
};

struct TopIdentityVerdict {
    unsigned genus = 0;
    std::vector<TopIdentityEntry> entries;
    /// dim of the degree 6g-6 piece of Q[alpha,beta,gamma]/I_g.
    std::uint64_t top_degree_dimension = 0;

    bool passed() const;
};

/// Checks alpha^m beta^n = -m! b_{g-n-1} alpha^{g-2} beta^{g-2} xi / (g-2)! in
/// Q[alpha,beta,gamma]/I_g for every m + 2n = 3g-3, n < g-1. Requires 2 <= g <= max_genus.
TopIdentityVerdict top_identity_check(unsigned g, BasisCache& cache, unsigned max_genus = kGroebnerGenusCap);
inline TopIdentityVerdict top_identity_check(unsigned g) { return top_identity_check(g, BasisCache::shared()); }

/// -(-4)^{g-1} m! b_{g-n-1} for m = i+k, n = j+l; throws std::invalid_argument
/// unless m + 2n = 3g-3 and n < g-1.
Rational pairing_value(unsigned g, std::pair<unsigned, unsigned> left, std::pair<unsigned, unsigned> right);

struct PairingEntry {
    std::pair<unsigned, unsigned> left;
    std::pair<unsigned, unsigned> right;
    unsigned m = 0;
    unsigned n = 0;
    Rational value;
};

/// Every admissible pairing, ordered by (n, m, i, j).
std::vector<PairingEntry> pairing_matrix(unsigned g);

}  // namespace ihrep
