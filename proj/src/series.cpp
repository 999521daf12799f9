#include "ihrep/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ihrep {

std::string format_univariate(std::span<const Rational> coeffs, TextStyle style, char variable) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        const Rational& c = coeffs[d];
        if (c.is_zero())
            continue;
        const Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag.is_one();
        if (d == 0 || !unit) {
            if (style == TextStyle::latex && !mag.is_integer())
                os << "\\frac{" << mag.numerator_string() << "}{" << mag.denominator_string() << "}";
            else
                os << mag;
        }
        if (d == 0)
            continue;
        if (!unit && style == TextStyle::plain)
            os << '*';
        os << variable;
        if (d > 1) {
            if (style == TextStyle::latex)
                os << "^{" << d << '}';
            else
                os << '^' << d;
        }
    }
    return first ? "0" : os.str();
}

// --- TruncatedSeries -------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    return monomial(Rational(1), 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, std::size_t degree, std::size_t order) {
    TruncatedSeries s(order);
    if (degree <= order)
        s.coeffs_[degree] = c;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order > this->order())
        throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t power) const {
    TruncatedSeries s(order());
    for (std::size_t d = 0; d + power <= order(); ++d)
        s.coeffs_[d + power] = coeffs_[d];
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(*this);
    for (auto& c : s.coeffs_)
        c = -c;
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t d = 0; d <= n; ++d)
        out[d] = a[d] + b[d];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
    std::vector<Rational> out(s.coefficients().begin(), s.coefficients().end());
    for (auto& x : out)
        x *= c;
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            if (!b[j].is_zero())
                out[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_divide(const TruncatedSeries& numerator, const TruncatedSeries& denominator) {
    if (denominator[0].is_zero())
        throw std::domain_error("series division by a series with zero constant term");
    const std::size_t n = std::min(numerator.order(), denominator.order());
    const Rational lead_inv = denominator[0].inverse();
    std::vector<Rational> out(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        Rational acc = numerator[d];
        for (std::size_t i = 1; i <= d; ++i)
            if (!denominator[i].is_zero())
                acc -= denominator[i] * out[d - i];
        out[d] = acc * lead_inv;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_linear_combination(std::span<const std::pair<Rational, TruncatedSeries>> terms) {
    if (terms.empty())
        throw std::invalid_argument("linear combination of no series");
    std::size_t n = terms.front().second.order();
    for (const auto& [c, s] : terms)
        n = std::min(n, s.order());
    std::vector<Rational> out(n + 1);
    for (const auto& [c, s] : terms)
        for (std::size_t d = 0; d <= n; ++d)
            out[d] += c * s[d];
    return TruncatedSeries(std::move(out));
}

// --- Polynomial ------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<std::int64_t> coeffs) {
    for (auto c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::binomial(int sign, std::size_t degree) {
    return Polynomial::monomial(Rational(1), 0) + Polynomial::monomial(Rational(sign), degree);
}

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t d = 0; d < out.size(); ++d)
        out[d] = a.coefficient(d) + b.coefficient(d);
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> out(p.coeffs_);
    for (auto& x : out)
        x *= c;
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(coeffs_);
    const int dd = divisor.degree();
    std::vector<Rational> quot(std::max(0, degree() - dd + 1));
    for (int d = degree(); d >= dd; --d) {
        const Rational q = rem[d] / divisor.leading_coefficient();
        if (q.is_zero())
            continue;
        quot[d - dd] = q;
        for (int i = 0; i <= dd; ++i)
            rem[d - dd + i] -= q * divisor.coeffs_[i];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

TruncatedSeries Polynomial::as_series(std::size_t order) const {
    std::vector<Rational> out(order + 1);
    for (std::size_t d = 0; d <= order && d < coeffs_.size(); ++d)
        out[d] = coeffs_[d];
    return TruncatedSeries(std::move(out));
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
    Polynomial result = Polynomial::monomial(Rational(1), 0);
    for (unsigned i = 0; i < exponent; ++i)
        result = result * p;
    return result;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        auto r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero())
        return x;
    return x.leading_coefficient().inverse() * x;
}

// --- RationalFunctionT -----------------------------------------------------

RationalFunctionT::RationalFunctionT(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (denominator_.coefficient(0).is_zero())
        throw std::invalid_argument("rational function denominator must have nonzero constant term");
    if (!numerator_.has_integer_coefficients() || !denominator_.has_integer_coefficients())
        throw std::invalid_argument("rational function coefficients must be integers");
}

namespace {

// Scales p by the lcm of its coefficient denominators over the gcd of the numerators.
Rational primitive_scale(const Polynomial& p) {
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& c : p.coefficients()) {
        if (c.is_zero())
            continue;
        mpz_class n(c.numerator_string()), d(c.denominator_string());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (num_gcd == 0)
        return Rational(1);
    return Rational::parse(den_lcm.get_str() + "/" + num_gcd.get_str());
}

}  // namespace

RationalFunctionT RationalFunctionT::reduced() const {
    const Polynomial common = gcd(numerator_, denominator_);
    Polynomial num = numerator_.is_zero() ? numerator_ : numerator_.divmod(common).first;
    Polynomial den = denominator_.divmod(common).first;
    if (num.is_zero())
        return RationalFunctionT(Polynomial{}, Polynomial{1});
    // Joint scaling so both become integral with coprime content.
    std::vector<Rational> all(num.coefficients().begin(), num.coefficients().end());
    all.insert(all.end(), den.coefficients().begin(), den.coefficients().end());
    Rational scale = primitive_scale(Polynomial(std::move(all)));
    if (den.coefficient(0).sign() * scale.sign() < 0)
        scale = -scale;
    return RationalFunctionT(scale * num, scale * den);
}

std::string RationalFunctionT::to_string(TextStyle style) const {
    const std::string num = numerator_.to_string(style);
    const std::string den = denominator_.to_string(style);
    if (den == "1")
        return num;
    const auto wrap = [](const std::string& s) {
        return s.find_first_of("+-", 1) == std::string::npos ? s : "(" + s + ")";
    };
    if (style == TextStyle::latex)
        return "\\frac{" + num + "}{" + den + "}";
    return wrap(num) + "/" + wrap(den);
}

TruncatedSeries series_expand(const RationalFunctionT& f, std::size_t order) {
    return series_divide(f.numerator().as_series(order), f.denominator().as_series(order));
}

}  // namespace ihrep
