#pragma once

#include "ihrep/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ihrep {

enum class TextStyle { plain, latex };

/// Renders sum_d coeffs[d] t^d, skipping zero terms; "0" when all vanish.
std::string format_univariate(std::span<const Rational> coeffs, TextStyle style = TextStyle::plain,
                              char variable = 't');

/// Power series in t known through t^order. Dense, exact.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    /// coeffs[d] is the coefficient of t^d; order is coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries monomial(const Rational& c, std::size_t degree, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t degree) const { return coeffs_.at(degree); }
    std::span<const Rational> coefficients() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t order) const;
    /// t^power * this, keeping the order.
    TruncatedSeries shifted(std::size_t power) const;
    bool is_zero() const;

    std::string to_string(TextStyle style = TextStyle::plain) const {
        return format_univariate(coeffs_, style);
    }

    TruncatedSeries operator-() const;
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

// Binary operations truncate to the smaller of the two orders.
TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}
/// Exact quotient of formal series; requires denominator[0] != 0.
TruncatedSeries series_divide(const TruncatedSeries& numerator, const TruncatedSeries& denominator);

/// sum c_i * s_i over a nonempty list, truncated to the minimum order.
TruncatedSeries series_linear_combination(std::span<const std::pair<Rational, TruncatedSeries>> terms);

/// Dense polynomial in t with rational coefficients; trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<std::int64_t> coeffs);

    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// 1 + sign * t^degree
    static Polynomial binomial(int sign, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rational(); }
    std::span<const Rational> coefficients() const { return coeffs_; }
    bool has_integer_coefficients() const;
    const Rational& leading_coefficient() const { return coeffs_.back(); }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division over Q: returns {quotient, remainder}.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    TruncatedSeries as_series(std::size_t order) const;
    std::string to_string(TextStyle style = TextStyle::plain) const {
        return format_univariate(coeffs_, style);
    }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);
/// Monic greatest common divisor over Q (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// numerator / denominator with integer coefficients and denominator(0) != 0.
class RationalFunctionT {
public:
    /// Throws std::invalid_argument on non-integer coefficients or denominator(0) == 0.
    RationalFunctionT(Polynomial numerator, Polynomial denominator);

    const Polynomial& numerator() const { return numerator_; }
    const Polynomial& denominator() const { return denominator_; }

    /// Cancels the common factor; the result is primitive with denominator(0) > 0.
    RationalFunctionT reduced() const;

    std::string to_string(TextStyle style = TextStyle::plain) const;

    /// Cross-multiplication equality.
    friend bool operator==(const RationalFunctionT& a, const RationalFunctionT& b) {
        return a.numerator_ * b.denominator_ == b.numerator_ * a.denominator_;
    }

private:
    Polynomial numerator_;
    Polynomial denominator_;
};

/// Power-series expansion at t = 0 through t^order by exact long division.
TruncatedSeries series_expand(const RationalFunctionT& f, std::size_t order);

}  // namespace ihrep
