#include "ihrep/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace ihrep {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    };
    if (text.empty())
        throw bad();
    const auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num_text = text.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num_text, true) || !valid_integer(den_text, false))
        throw bad();
    std::string num_str(num_text);
    if (num_str.front() == '+')
        num_str.erase(0, 1);
    mpz_class num(num_str, 10);
    mpz_class den(std::string(den_text), 10);
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::int64_t Rational::to_int64() const {
    if (!is_integer())
        throw std::domain_error("rational " + to_string() + " is not an integer");
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p())
        throw std::domain_error("integer " + to_string() + " out of range");
    return n.get_si();
}

Rational Rational::inverse() const {
    if (is_zero())
        throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero())
        throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(unsigned n) {
    Rational result(1);
    for (unsigned i = 2; i <= n; ++i)
        result *= Rational(static_cast<std::int64_t>(i));
    return result;
}

Rational power(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational square = base;
    while (exponent != 0) {
        if (exponent & 1u)
            result *= square;
        exponent >>= 1;
        if (exponent != 0)
            square *= square;
    }
    return result;
}

}  // namespace ihrep
