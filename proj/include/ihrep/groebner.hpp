#pragma once

#include "ihrep/graded_poly.hpp"
#include "ihrep/series.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ihrep {

/// Reduced monic Groebner basis under MonomialOrder, generators sorted by
/// increasing leading monomial. Immutable once built.
class GroebnerBasis {
public:
    /// Wraps generators that already form a reduced basis (made monic and sorted here).
    /// Throws std::invalid_argument if the reduced-basis invariant fails.
    explicit GroebnerBasis(std::vector<GradedPoly> generators, std::optional<unsigned> source_k = {});

    std::span<const GradedPoly> generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }
    std::optional<unsigned> source_k() const { return source_k_; }
    static constexpr std::string_view order_name() { return MonomialOrder::name(); }

    /// Remainder of full multivariate division; zero iff p is in the ideal.
    GradedPoly normal_form(const GradedPoly& p) const;
    bool contains(const GradedPoly& p) const { return normal_form(p).is_zero(); }

    /// Post-hoc check that every S-polynomial reduces to zero.
    bool s_polynomials_reduce_to_zero() const;

    /// Text form: a header line, the optional "k" line, then one "gen" line per generator.
    std::string to_canonical_text() const;
    static GroebnerBasis parse_canonical_text(std::string_view text);

    friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

private:
    std::vector<GradedPoly> generators_;
    std::optional<unsigned> source_k_;
};

/// Every term of each generator is free of other generators' leading monomials,
/// and each generator is monic.
bool is_reduced_basis(std::span<const GradedPoly> generators);

/// Division remainder of p by an arbitrary list of nonzero divisors.
GradedPoly reduce(const GradedPoly& p, std::span<const GradedPoly> divisors);

GradedPoly s_polynomial(const GradedPoly& f, const GradedPoly& g);

/// [c_{k+1}, c_{k+2}, c_{k+3}]
std::vector<GradedPoly> ideal_generators(unsigned k);

/// Reduced Groebner basis of the ideal generated by `gens` (normal pair
/// strategy, coprime criterion). Throws std::invalid_argument if all are zero.
GroebnerBasis buchberger(std::span<const GradedPoly> gens, std::optional<unsigned> source_k = {});

/// buchberger(ideal_generators(k)), tagged with k.
GroebnerBasis relation_ideal_basis(unsigned k);

inline GradedPoly normal_form(const GradedPoly& p, const GroebnerBasis& basis) {
    return basis.normal_form(p);
}

/// Minimal monomial generators of a monomial ideal (an antichain under divisibility).
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Throws std::invalid_argument unless the generators form an antichain.
    explicit MonomialIdeal(std::vector<Monomial3> generators);

    std::span<const Monomial3> generators() const { return generators_; }
    bool contains(const Monomial3& m) const;

private:
    std::vector<Monomial3> generators_;
};

MonomialIdeal leading_term_ideal(const GroebnerBasis& basis);

/// Maximum generator count accepted by hilbert_series_quotient.
inline constexpr std::size_t kHilbertGeneratorCap = 256;

/// Hilbert series of Q[alpha, beta, gamma]/ideal with weights 2, 4, 6, by
/// inclusion-exclusion over lcms (grouped through colon ideals), over
/// (1-t^2)(1-t^4)(1-t^6). Not reduced.
RationalFunctionT hilbert_series_quotient(const MonomialIdeal& ideal);

}  // namespace ihrep
