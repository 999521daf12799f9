#include "ihrep/exterior.hpp"

#include "ihrep/linalg.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace ihrep {

int wedge_sign(GeneratorMask a, GeneratorMask b) {
    if ((a & b) != 0)
        return 0;
    // Each generator of b moves left past the generators of a with larger index.
    unsigned swaps = 0;
    for (GeneratorMask rest = b; rest != 0; rest &= rest - 1) {
        const unsigned index = static_cast<unsigned>(std::countr_zero(rest));
        const GeneratorMask above = index >= 63 ? 0 : (~GeneratorMask{0} << (index + 1));
        swaps += static_cast<unsigned>(std::popcount(a & above));
    }
    return (swaps % 2 == 0) ? 1 : -1;
}

// --- ExtElement ----------------------------------------------------------------

ExtElement::ExtElement(std::vector<unsigned> generator_degrees) : degrees_(std::move(generator_degrees)) {
    if (degrees_.size() > 64)
        throw std::invalid_argument("at most 64 exterior generators are supported");
}

ExtElement ExtElement::one(std::vector<unsigned> generator_degrees) {
    ExtElement x(std::move(generator_degrees));
    x.add_term(0, Rational(1));
    return x;
}

ExtElement ExtElement::generator(std::vector<unsigned> generator_degrees, std::size_t index, const Rational& c) {
    ExtElement x(std::move(generator_degrees));
    if (index >= x.generator_count())
        throw std::out_of_range("exterior generator index out of range");
    x.add_term(GeneratorMask{1} << index, c);
    return x;
}

unsigned ExtElement::degree_of(GeneratorMask mask) const {
    unsigned d = 0;
    for (; mask != 0; mask &= mask - 1)
        d += degrees_[static_cast<std::size_t>(std::countr_zero(mask))];
    return d;
}

Rational ExtElement::coefficient(GeneratorMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rational() : it->second;
}

void ExtElement::add_term(GeneratorMask mask, const Rational& c) {
    if (c.is_zero())
        return;
    if (degrees_.size() < 64 && (mask >> degrees_.size()) != 0)
        throw std::out_of_range("exterior monomial uses a missing generator");
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

ExtElement& ExtElement::operator+=(const ExtElement& rhs) {
    if (rhs.degrees_ != degrees_)
        throw std::invalid_argument("exterior elements from different algebras");
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    if (a.degrees_ != b.degrees_)
        throw std::invalid_argument("exterior elements from different algebras");
    ExtElement out(a.degrees_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            if (const int s = wedge_sign(ma, mb); s != 0)
                out.add_term(ma | mb, Rational(s) * ca * cb);
    return out;
}

ExtElement operator*(const Rational& c, const ExtElement& a) {
    ExtElement out(a.degrees_);
    for (const auto& [m, x] : a.terms_)
        out.add_term(m, c * x);
    return out;
}

ExtElement pow(const ExtElement& x, unsigned exponent) {
    ExtElement result = ExtElement::one(x.generator_degrees());
    for (unsigned i = 0; i < exponent; ++i)
        result = result * x;
    return result;
}

// --- Lefschetz decomposition ---------------------------------------------------

std::vector<unsigned> psi_degrees(unsigned g) { return std::vector<unsigned>(2 * g, 3); }

ExtElement gamma_element(unsigned g) {
    ExtElement gamma(psi_degrees(g));
    for (unsigned i = 0; i < g; ++i)
        gamma.add_term((GeneratorMask{1} << i) | (GeneratorMask{1} << (i + g)), Rational(-2));
    return gamma;
}

std::uint64_t binomial(unsigned n, int k) {
    if (k < 0 || static_cast<unsigned>(k) > n)
        return 0;
    const unsigned kk = std::min<unsigned>(static_cast<unsigned>(k), n - static_cast<unsigned>(k));
    std::uint64_t result = 1;
    for (unsigned i = 1; i <= kk; ++i) {
        // result * (n - kk + i) / i stays integral at every step.
        const std::uint64_t factor = n - kk + i;
        if (result > std::numeric_limits<std::uint64_t>::max() / factor)
            throw std::overflow_error("binomial coefficient overflow");
        result = result * factor / i;
    }
    return result;
}

namespace {

std::vector<GeneratorMask> subsets_of_size(unsigned n, unsigned size) {
    std::vector<GeneratorMask> out;
    for (GeneratorMask m = 0; m < (GeneratorMask{1} << n); ++m)
        if (static_cast<unsigned>(std::popcount(m)) == size)
            out.push_back(m);
    return out;
}

}  // namespace

std::uint64_t prim_dimension_bruteforce(unsigned g, unsigned l) {
    if (g < 2 || g > kBruteForceMaxGenus)
        throw std::invalid_argument("brute-force primitive dimensions need 2 <= g <= " +
                                    std::to_string(kBruteForceMaxGenus));
    if (l > g)
        throw std::invalid_argument("primitive level must satisfy l <= g");
    const unsigned n = 2 * g;
    const ExtElement lefschetz = pow(gamma_element(g), g - l + 1);
    const auto source = subsets_of_size(n, l);
    const unsigned target_size = l + 2 * (g - l + 1);
    if (target_size > n)
        return source.size();
    const auto target = subsets_of_size(n, target_size);

    std::map<GeneratorMask, std::size_t> column;
    for (std::size_t i = 0; i < target.size(); ++i)
        column[target[i]] = i;
    RationalMatrix images;
    for (GeneratorMask s : source) {
        ExtElement basis_element(psi_degrees(g));
        basis_element.add_term(s, Rational(1));
        const ExtElement image = lefschetz * basis_element;
        std::vector<Rational> row(target.size());
        for (const auto& [mask, c] : image.terms())
            row.at(column.at(mask)) = c;
        images.push_back(std::move(row));
    }
    return source.size() - rank(std::move(images));
}

std::uint64_t prim_dimension_formula(unsigned g, unsigned l) {
    if (l > g)
        throw std::invalid_argument("primitive level must satisfy l <= g");
    return binomial(2 * g, static_cast<int>(l)) - binomial(2 * g, static_cast<int>(l) - 2);
}

// --- Jacobian model ------------------------------------------------------------

JacElement JacElement::one(unsigned g, unsigned max_u) {
    JacElement x(g, max_u);
    x.add_term(0, 0, Rational(1));
    return x;
}

JacElement JacElement::alpha_image(unsigned g, unsigned max_u) {
    JacElement w(g, max_u);
    for (unsigned i = 0; i < g; ++i)
        w.add_term((GeneratorMask{1} << i) | (GeneratorMask{1} << (i + g)), 0, Rational(-2));
    return w;
}

JacElement JacElement::beta_image(unsigned g, unsigned max_u) {
    JacElement x(g, max_u);
    x.add_term(0, 2, Rational(4));
    return x;
}

JacElement JacElement::psi_image(unsigned g, unsigned max_u, unsigned index) {
    if (index >= 2 * g)
        throw std::out_of_range("psi index out of range");
    JacElement x(g, max_u);
    x.add_term(GeneratorMask{1} << index, 1, Rational(-2));
    return x;
}

void JacElement::add_term(GeneratorMask mask, unsigned u_exponent, const Rational& c) {
    if (c.is_zero() || u_exponent > max_u_)
        return;
    if ((mask >> (2 * g_)) != 0)
        throw std::out_of_range("Jacobian monomial uses a missing generator");
    auto [it, inserted] = terms_.try_emplace(Key{mask, u_exponent}, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

bool JacElement::is_involution_invariant() const {
    for (const auto& [key, c] : terms_)
        if ((std::popcount(key.first) + key.second) % 2 != 0)
            return false;
    return true;
}

JacElement operator*(const JacElement& a, const JacElement& b) {
    if (a.g_ != b.g_ || a.max_u_ != b.max_u_)
        throw std::invalid_argument("Jacobian elements from different models");
    JacElement out(a.g_, a.max_u_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            if (const int s = wedge_sign(ka.first, kb.first); s != 0)
                out.add_term(ka.first | kb.first, ka.second + kb.second, Rational(s) * ca * cb);
    return out;
}

unsigned reliable_degree_limit(unsigned g, unsigned max_u) { return 2 * (max_u - g); }

namespace {

void check_jacobian_parameters(unsigned g, unsigned max_u) {
    if (g < 2)
        throw std::invalid_argument("genus must be at least 2");
    if (max_u < g + 3)
        throw std::invalid_argument("u-truncation must satisfy U >= g + 3");
}

}  // namespace

std::map<unsigned, std::uint64_t> restriction_image_dimensions(unsigned g, unsigned max_u) {
    check_jacobian_parameters(g, max_u);
    if (g > kRestrictionMaxGenus)
        throw std::invalid_argument("restriction image brute force needs g <= " +
                                    std::to_string(kRestrictionMaxGenus));
    const unsigned limit = reliable_degree_limit(g, max_u);
    const unsigned n = 2 * g;

    // Images of psi_S for every subset S, multiplied in increasing index order.
    std::vector<JacElement> psi_products;
    for (GeneratorMask s = 0; s < (GeneratorMask{1} << n); ++s) {
        JacElement p = JacElement::one(g, max_u);
        for (unsigned i = 0; i < n; ++i)
            if (s & (GeneratorMask{1} << i))
                p = p * JacElement::psi_image(g, max_u, i);
        psi_products.push_back(std::move(p));
    }
    const JacElement w = JacElement::alpha_image(g, max_u);
    const JacElement b = JacElement::beta_image(g, max_u);

    std::map<unsigned, std::uint64_t> result;
    for (unsigned d = 0; d <= limit; ++d) {
        // Coordinates of total degree d, split by whether u^{g-1} divides them.
        std::map<JacElement::Key, std::size_t> coordinate;
        std::vector<bool> low_u;
        for (unsigned e = 0; 2 * e <= d; ++e) {
            const unsigned size = d - 2 * e;
            if (size > n)
                continue;
            for (GeneratorMask m : subsets_of_size(n, size)) {
                coordinate.emplace(JacElement::Key{m, e}, coordinate.size());
                low_u.push_back(e + 1 < g);
            }
        }
        RationalMatrix full, projected;
        JacElement w_power = JacElement::one(g, max_u);
        for (unsigned a = 0; 2 * a <= d; ++a, w_power = w_power * w) {
            JacElement wb = w_power;
            for (unsigned bb = 0; 2 * a + 4 * bb <= d; ++bb, wb = wb * b) {
                const unsigned rest = d - 2 * a - 4 * bb;
                if (rest % 3 != 0 || rest / 3 > n)
                    continue;
                for (GeneratorMask s : subsets_of_size(n, rest / 3)) {
                    const JacElement image = wb * psi_products[s];
                    std::vector<Rational> row(coordinate.size());
                    for (const auto& [key, c] : image.terms())
                        row.at(coordinate.at(key)) = c;
                    std::vector<Rational> low;
                    for (std::size_t i = 0; i < row.size(); ++i)
                        if (low_u[i])
                            low.push_back(row[i]);
                    full.push_back(std::move(row));
                    projected.push_back(std::move(low));
                }
            }
        }
        // dim(V meet W) = dim V - dim(projection of V away from W).
        result[d] = rank(std::move(full)) - rank(std::move(projected));
    }
    return result;
}

std::map<unsigned, std::uint64_t> invariant_truncated_dimensions(unsigned g, unsigned max_u) {
    check_jacobian_parameters(g, max_u);
    const unsigned limit = reliable_degree_limit(g, max_u);
    std::map<unsigned, std::uint64_t> result;
    for (unsigned d = 0; d <= limit; ++d) {
        std::uint64_t count = 0;
        for (unsigned e = g - 1; 2 * e <= d; ++e) {
            const unsigned size = d - 2 * e;
            if ((size + e) % 2 == 0)
                count += binomial(2 * g, static_cast<int>(size));
        }
        result[d] = count;
    }
    return result;
}

}  // namespace ihrep
