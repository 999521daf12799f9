#pragma once

#include "ihrep/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace ihrep {

/// Subset of generator indices, bit i set for generator i (0-based).
using GeneratorMask = std::uint64_t;

/// Sign of e_A * e_B rewritten as e_{A u B} in increasing index order
/// (0 if A and B intersect).
int wedge_sign(GeneratorMask a, GeneratorMask b);

/// Element of the exterior algebra on up to 64 anticommuting generators with
/// per-generator degrees.
class ExtElement {
public:
    explicit ExtElement(std::vector<unsigned> generator_degrees);

    static ExtElement one(std::vector<unsigned> generator_degrees);
    static ExtElement generator(std::vector<unsigned> generator_degrees, std::size_t index,
                                const Rational& c = Rational(1));

    std::size_t generator_count() const { return degrees_.size(); }
    const std::vector<unsigned>& generator_degrees() const { return degrees_; }
    const std::map<GeneratorMask, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree_of(GeneratorMask mask) const;
    Rational coefficient(GeneratorMask mask) const;

    void add_term(GeneratorMask mask, const Rational& c);

    ExtElement& operator+=(const ExtElement& rhs);
    friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
    friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator*(const Rational& c, const ExtElement& a);
    friend bool operator==(const ExtElement&, const ExtElement&) = default;

private:
    std::vector<unsigned> degrees_;
    std::map<GeneratorMask, Rational> terms_;
};

ExtElement pow(const ExtElement& x, unsigned exponent);

/// Generators psi_1..psi_{2g} of degree 3.
std::vector<unsigned> psi_degrees(unsigned g);

/// gamma = -2 sum_{i=1..g} psi_i psi_{i+g}.
ExtElement gamma_element(unsigned g);

inline constexpr unsigned kBruteForceMaxGenus = 5;

/// dim ker(gamma^{g-l+1}) on exterior degree l, by exact rank. Requires 2 <= g <= 5, l <= g.
std::uint64_t prim_dimension_bruteforce(unsigned g, unsigned l);

/// C(2g, l) - C(2g, l-2).
std::uint64_t prim_dimension_formula(unsigned g, unsigned l);

std::uint64_t binomial(unsigned n, int k);

/// Element of H*(Jac) (x) Q[u]: anticommuting degree-1 d_1..d_{2g} and a central
/// degree-2 u, with u-exponents above `max_u` dropped.
class JacElement {
public:
    using Key = std::pair<GeneratorMask, unsigned>;  // (d-subset, u-exponent)

    JacElement(unsigned g, unsigned max_u) : g_(g), max_u_(max_u) {}

    static JacElement one(unsigned g, unsigned max_u);
    /// w = -2 sum d_i d_{i+g}, image of alpha.
    static JacElement alpha_image(unsigned g, unsigned max_u);
    /// 4u^2, image of beta.
    static JacElement beta_image(unsigned g, unsigned max_u);
    /// -2 u d_i, image of psi_i (0-based index).
    static JacElement psi_image(unsigned g, unsigned max_u, unsigned index);

    unsigned genus() const { return g_; }
    unsigned max_u() const { return max_u_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(GeneratorMask mask, unsigned u_exponent, const Rational& c);
    /// Invariant under d_i -> -d_i, u -> -u.
    bool is_involution_invariant() const;

    friend JacElement operator*(const JacElement& a, const JacElement& b);

private:
    unsigned g_;
    unsigned max_u_;
    std::map<Key, Rational> terms_;
};

inline constexpr unsigned kRestrictionMaxGenus = 3;

/// Highest total degree not distorted by the u-truncation: 2(U - g).
unsigned reliable_degree_limit(unsigned g, unsigned max_u);

/// Per degree d <= reliable_degree_limit, dim of (image of the restriction map)
/// meet (H*(Jac) (x) u^{g-1} Q[u]). Requires 2 <= g <= 3 and U >= g + 3.
std::map<unsigned, std::uint64_t> restriction_image_dimensions(unsigned g, unsigned max_u);

/// Per degree d <= reliable_degree_limit, dim of the involution-invariant part of
/// H*(Jac) (x) u^{g-1} Q[u] by direct count. Requires g >= 2 and U >= g + 3.
std::map<unsigned, std::uint64_t> invariant_truncated_dimensions(unsigned g, unsigned max_u);

}  // namespace ihrep
