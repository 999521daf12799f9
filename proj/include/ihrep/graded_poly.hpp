#pragma once

#include "ihrep/rational.hpp"
#include "ihrep/series.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>

namespace ihrep {

/// alpha^i beta^j gamma^k with weights 2, 4, 6.
struct Monomial3 {
    std::uint32_t alpha = 0;
    std::uint32_t beta = 0;
    std::uint32_t gamma = 0;

    static constexpr unsigned kAlphaWeight = 2;
    static constexpr unsigned kBetaWeight = 4;
    static constexpr unsigned kGammaWeight = 6;

    std::uint64_t weighted_degree() const {
        return std::uint64_t{kAlphaWeight} * alpha + std::uint64_t{kBetaWeight} * beta +
               std::uint64_t{kGammaWeight} * gamma;
    }
    bool divides(const Monomial3& other) const {
        return alpha <= other.alpha && beta <= other.beta && gamma <= other.gamma;
    }
    bool is_one() const { return alpha == 0 && beta == 0 && gamma == 0; }

    friend bool operator==(const Monomial3&, const Monomial3&) = default;
};

/// Product; throws std::overflow_error if an exponent overflows.
Monomial3 operator*(const Monomial3& a, const Monomial3& b);
/// a / b; requires b | a.
Monomial3 operator/(const Monomial3& a, const Monomial3& b);
Monomial3 lcm(const Monomial3& a, const Monomial3& b);
bool coprime(const Monomial3& a, const Monomial3& b);

/// The fixed term order: weighted degree first, ties broken lexicographically
/// with alpha > beta > gamma. Graded and multiplicative; 1 is the minimum.
struct MonomialOrder {
    static std::strong_ordering compare(const Monomial3& a, const Monomial3& b);
    static constexpr std::string_view name() { return "wdeg-lex(alpha>beta>gamma;2,4,6)"; }
};

/// Map comparator placing larger monomials (under MonomialOrder) first.
struct LeadingFirst {
    bool operator()(const Monomial3& a, const Monomial3& b) const {
        return MonomialOrder::compare(a, b) == std::strong_ordering::greater;
    }
};

/// Sparse polynomial in alpha, beta, gamma over Q. No zero coefficients are stored;
/// terms iterate from the leading monomial down.
class GradedPoly {
public:
    using TermMap = std::map<Monomial3, Rational, LeadingFirst>;

    /// Degree reported for the zero polynomial.
    static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

    GradedPoly() = default;
    explicit GradedPoly(const Rational& constant);
    static GradedPoly monomial(const Monomial3& m, const Rational& c = Rational(1));
    static GradedPoly alpha() { return monomial({1, 0, 0}); }
    static GradedPoly beta() { return monomial({0, 1, 0}); }
    static GradedPoly gamma() { return monomial({0, 0, 1}); }

    /// Inverse of to_string(); throws std::invalid_argument.
    static GradedPoly parse(std::string_view text);

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t degree() const;
    bool is_homogeneous() const;

    const Monomial3& leading_monomial() const;
    const Rational& leading_coefficient() const;
    Rational coefficient(const Monomial3& m) const;
    GradedPoly monic() const;

    void add_term(const Monomial3& m, const Rational& c);

    GradedPoly operator-() const;
    GradedPoly& operator+=(const GradedPoly& rhs);
    GradedPoly& operator-=(const GradedPoly& rhs);
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    friend GradedPoly operator*(const Rational& c, const GradedPoly& p);
    friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

    /// c * m * this
    GradedPoly times_term(const Monomial3& m, const Rational& c) const;

    /// Canonical rendering, leading monomial first: "1/6*alpha^3 + 1/3*alpha*beta".
    std::string to_string(TextStyle style = TextStyle::plain) const;

private:
    TermMap terms_;
};

inline GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b) { return a + b; }
inline GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b) { return a * b; }
inline GradedPoly poly_scale(const Rational& c, const GradedPoly& a) { return c * a; }
GradedPoly pow(const GradedPoly& p, unsigned exponent);

std::string to_string(const Monomial3& m, TextStyle style = TextStyle::plain);

/// The sequence c_0 = 1, c_1 = alpha, c_2 = alpha^2/2,
/// n c_n = alpha c_{n-1} + (n-2) beta c_{n-2} + 2 gamma c_{n-3}.
/// Memoized; safe to call concurrently.
GradedPoly mumford_c(unsigned n);

/// xi = alpha*beta + 2*gamma.
GradedPoly xi();

/// alpha^i beta^j xi^k expanded in alpha, beta, gamma.
GradedPoly expand_abxi_monomial(unsigned i, unsigned j, unsigned k);

}  // namespace ihrep
