#include "ihrep/graded_poly.hpp"

#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ihrep {

namespace {

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
    if (a > std::numeric_limits<std::uint32_t>::max() - b)
        throw std::overflow_error("monomial exponent overflow");
    return a + b;
}

}  // namespace

Monomial3 operator*(const Monomial3& a, const Monomial3& b) {
    return {checked_add(a.alpha, b.alpha), checked_add(a.beta, b.beta), checked_add(a.gamma, b.gamma)};
}

Monomial3 operator/(const Monomial3& a, const Monomial3& b) {
    if (!b.divides(a))
        throw std::invalid_argument("monomial quotient is not exact");
    return {a.alpha - b.alpha, a.beta - b.beta, a.gamma - b.gamma};
}

Monomial3 lcm(const Monomial3& a, const Monomial3& b) {
    return {std::max(a.alpha, b.alpha), std::max(a.beta, b.beta), std::max(a.gamma, b.gamma)};
}

bool coprime(const Monomial3& a, const Monomial3& b) {
    return (a.alpha == 0 || b.alpha == 0) && (a.beta == 0 || b.beta == 0) && (a.gamma == 0 || b.gamma == 0);
}

std::strong_ordering MonomialOrder::compare(const Monomial3& a, const Monomial3& b) {
    if (auto c = a.weighted_degree() <=> b.weighted_degree(); c != 0)
        return c;
    if (auto c = a.alpha <=> b.alpha; c != 0)
        return c;
    if (auto c = a.beta <=> b.beta; c != 0)
        return c;
    return a.gamma <=> b.gamma;
}

std::string to_string(const Monomial3& m, TextStyle style) {
    static constexpr const char* plain_names[] = {"alpha", "beta", "gamma"};
    static constexpr const char* latex_names[] = {"\\alpha", "\\beta", "\\gamma"};
    const std::uint32_t exps[] = {m.alpha, m.beta, m.gamma};
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < 3; ++v) {
        if (exps[v] == 0)
            continue;
        if (style == TextStyle::plain) {
            if (!first)
                os << '*';
            os << plain_names[v];
            if (exps[v] > 1)
                os << '^' << exps[v];
        } else {
            os << latex_names[v];
            if (exps[v] > 1)
                os << "^{" << exps[v] << '}';
        }
        first = false;
    }
    return first ? "1" : os.str();
}

// --- GradedPoly --------------------------------------------------------------

GradedPoly::GradedPoly(const Rational& constant) {
    if (!constant.is_zero())
        terms_.emplace(Monomial3{}, constant);
}

GradedPoly GradedPoly::monomial(const Monomial3& m, const Rational& c) {
    GradedPoly p;
    p.add_term(m, c);
    return p;
}

std::int64_t GradedPoly::degree() const {
    if (terms_.empty())
        return kZeroDegree;
    // The order is graded, so the leading monomial has maximal degree.
    return static_cast<std::int64_t>(terms_.begin()->first.weighted_degree());
}

bool GradedPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    const auto d = terms_.begin()->first.weighted_degree();
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree() != d)
            return false;
    return true;
}

const Monomial3& GradedPoly::leading_monomial() const {
    if (terms_.empty())
        throw std::logic_error("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& GradedPoly::leading_coefficient() const {
    if (terms_.empty())
        throw std::logic_error("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
}

Rational GradedPoly::coefficient(const Monomial3& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

GradedPoly GradedPoly::monic() const {
    if (terms_.empty())
        return *this;
    return leading_coefficient().inverse() * *this;
}

void GradedPoly::add_term(const Monomial3& m, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly out(*this);
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

GradedPoly operator*(const Rational& c, const GradedPoly& p) {
    if (c.is_zero())
        return {};
    GradedPoly out(p);
    for (auto& [m, coeff] : out.terms_)
        coeff *= c;
    return out;
}

GradedPoly GradedPoly::times_term(const Monomial3& m, const Rational& c) const {
    GradedPoly out;
    if (c.is_zero())
        return out;
    // Multiplication by a monomial preserves the order, so hinted insertion stays linear.
    for (const auto& [mm, cc] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), mm * m, cc * c);
    return out;
}

std::string GradedPoly::to_string(TextStyle style) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (m.is_one() || !mag.is_one()) {
            if (style == TextStyle::latex && !mag.is_integer())
                os << "\\frac{" << mag.numerator_string() << "}{" << mag.denominator_string() << "}";
            else
                os << mag;
        }
        if (m.is_one())
            continue;
        if (!mag.is_one() && style == TextStyle::plain)
            os << '*';
        os << ihrep::to_string(m, style);
    }
    return os.str();
}

GradedPoly GradedPoly::parse(std::string_view text) {
    const auto fail = [&](const std::string& why) {
        return std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    std::vector<std::string> tokens;
    {
        std::istringstream is{std::string(text)};
        for (std::string tok; is >> tok;)
            tokens.push_back(tok);
    }
    if (tokens.empty())
        throw fail("empty input");
    if (tokens.size() == 1 && tokens[0] == "0")
        return {};

    GradedPoly out;
    const auto parse_term = [&](std::string term, bool negate) {
        if (!term.empty() && term.front() == '-') {
            negate = !negate;
            term.erase(0, 1);
        }
        if (term.empty())
            throw fail("empty term");
        Rational coeff(1);
        Monomial3 mono;
        std::size_t pos = 0;
        bool first_factor = true;
        while (pos <= term.size()) {
            const auto star = term.find('*', pos);
            const std::string factor = term.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
            if (factor.empty())
                throw fail("empty factor");
            if (first_factor && std::isdigit(static_cast<unsigned char>(factor.front()))) {
                coeff = Rational::parse(factor);
            } else {
                const auto caret = factor.find('^');
                const std::string name = factor.substr(0, caret);
                std::uint32_t exponent = 1;
                if (caret != std::string::npos) {
                    const std::string exp_text = factor.substr(caret + 1);
                    if (exp_text.empty() || exp_text.find_first_not_of("0123456789") != std::string::npos)
                        throw fail("bad exponent");
                    exponent = static_cast<std::uint32_t>(std::stoul(exp_text));
                }
                if (name == "alpha")
                    mono.alpha = checked_add(mono.alpha, exponent);
                else if (name == "beta")
                    mono.beta = checked_add(mono.beta, exponent);
                else if (name == "gamma")
                    mono.gamma = checked_add(mono.gamma, exponent);
                else
                    throw fail("unknown variable '" + name + "'");
            }
            first_factor = false;
            if (star == std::string::npos)
                break;
            pos = star + 1;
        }
        out.add_term(mono, negate ? -coeff : coeff);
    };

    parse_term(tokens[0], false);
    for (std::size_t i = 1; i < tokens.size(); i += 2) {
        if (i + 1 >= tokens.size())
            throw fail("dangling operator");
        if (tokens[i] != "+" && tokens[i] != "-")
            throw fail("expected + or -");
        parse_term(tokens[i + 1], tokens[i] == "-");
    }
    return out;
}

GradedPoly pow(const GradedPoly& p, unsigned exponent) {
    GradedPoly result(Rational(1));
    for (unsigned i = 0; i < exponent; ++i)
        result = result * p;
    return result;
}

// --- c_n ---------------------------------------------------------------------

GradedPoly mumford_c(unsigned n) {
    static std::mutex mutex;
    static std::vector<GradedPoly> memo;

    std::lock_guard lock(mutex);
    if (memo.empty()) {
        memo.emplace_back(Rational(1));
        memo.push_back(GradedPoly::alpha());
        memo.push_back(Rational(1, 2) * pow(GradedPoly::alpha(), 2));
    }
    const GradedPoly a = GradedPoly::alpha();
    const GradedPoly b = GradedPoly::beta();
    const GradedPoly g = GradedPoly::gamma();
    for (std::size_t m = memo.size(); m <= n; ++m) {
        GradedPoly next = a * memo[m - 1] +
                          Rational(static_cast<std::int64_t>(m) - 2) * (b * memo[m - 2]) +
                          Rational(2) * (g * memo[m - 3]);
        next = Rational(1, static_cast<std::int64_t>(m)) * next;
        if (!next.is_homogeneous() || next.degree() != static_cast<std::int64_t>(2 * m))
            throw std::logic_error("c_" + std::to_string(m) + " is not homogeneous of degree 2n");
        memo.push_back(std::move(next));
    }
    return memo[n];
}

GradedPoly xi() {
    return GradedPoly::alpha() * GradedPoly::beta() + Rational(2) * GradedPoly::gamma();
}

GradedPoly expand_abxi_monomial(unsigned i, unsigned j, unsigned k) {
    return pow(xi(), k).times_term(Monomial3{i, j, 0}, Rational(1));
}

}  // namespace ihrep
