#include "ihrep/exterior.hpp"
#include "ihrep/groebner.hpp"
#include "ihrep/ih_assembly.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace ihrep {

namespace {

void require_genus(unsigned g) {
    if (g < 2)
        throw std::invalid_argument("genus must be at least 2, got " + std::to_string(g));
}

std::uint64_t as_dimension(const Rational& c, const std::string& what, std::size_t degree) {
    if (!c.is_integer() || c.sign() < 0)
        throw ComputationError(what + ": coefficient of t^" + std::to_string(degree) + " is " + c.to_string() +
                               ", not a nonnegative integer");
    return static_cast<std::uint64_t>(c.to_int64());
}

}  // namespace

RationalFunctionT equivariant_rational_function(unsigned g) {
    require_genus(g);
    const Polynomial numerator = pow(Polynomial::binomial(1, 3), 2 * g) -
                                 Polynomial::monomial(Rational(1), 2 * g + 2) * pow(Polynomial::binomial(1, 1), 2 * g);
    const Polynomial denominator = Polynomial::binomial(-1, 2) * Polynomial::binomial(-1, 4);
    return RationalFunctionT(numerator, denominator);
}

TruncatedSeries equivariant_series_closed(unsigned g, std::size_t order) {
    return series_expand(equivariant_rational_function(g), order);
}

TruncatedSeries correction_series(unsigned g, std::size_t order) {
    require_genus(g);
    const Polynomial shift = Polynomial::monomial(Rational(1), 2 * g - 2);
    const Polynomial sign_shift = Polynomial::monomial(Rational((g - 1) % 2 == 0 ? 1 : -1), 2 * g - 2);
    const RationalFunctionT even_part(pow(Polynomial::binomial(1, 1), 2 * g) * shift, Polynomial::binomial(-1, 2));
    const RationalFunctionT odd_part(pow(Polynomial::binomial(-1, 1), 2 * g) * sign_shift, Polynomial::binomial(1, 2));
    const std::vector<std::pair<Rational, TruncatedSeries>> terms{
        {Rational(1, 2), series_expand(even_part, order)},
        {Rational(1, 2), series_expand(odd_part, order)},
    };
    TruncatedSeries result = series_linear_combination(terms);
    for (std::size_t d = 0; d <= result.order(); ++d)
        as_dimension(result[d], "correction series", d);
    return result;
}

std::string to_string(Route route) { return route == Route::closed_form ? "closed-form" : "structural"; }

bool BettiTable::is_palindromic() const {
    return std::equal(coefficients.begin(), coefficients.end(), coefficients.rbegin());
}

std::uint64_t BettiTable::total_dimension() const {
    return std::accumulate(coefficients.begin(), coefficients.end(), std::uint64_t{0});
}

BettiTable ip_series_closed(unsigned g, std::size_t order) {
    require_genus(g);
    if (order < 6 * std::size_t{g} - 6)
        throw std::invalid_argument("order must be at least 6g-6");
    const TruncatedSeries difference = equivariant_series_closed(g, order) - correction_series(g, order);
    BettiTable table{g, {}, Route::closed_form};
    const std::size_t top = table.top_degree();
    for (std::size_t d = 0; d <= order; ++d) {
        if (d > top) {
            if (!difference[d].is_zero())
                throw ComputationError("intersection series is not a polynomial: coefficient of t^" +
                                       std::to_string(d) + " is " + difference[d].to_string());
            continue;
        }
        table.coefficients.push_back(as_dimension(difference[d], "intersection series", d));
    }
    return table;
}

TruncatedSeries t_over_tanh_series(unsigned K) {
    const std::size_t order = 2 * std::size_t{K};
    std::vector<Rational> cosh_coeffs(order + 1), sinh_over_t(order + 1);
    for (std::size_t p = 0; 2 * p <= order; ++p) {
        cosh_coeffs[2 * p] = factorial(static_cast<unsigned>(2 * p)).inverse();
        sinh_over_t[2 * p] = factorial(static_cast<unsigned>(2 * p + 1)).inverse();
    }
    return series_divide(TruncatedSeries(std::move(cosh_coeffs)), TruncatedSeries(std::move(sinh_over_t)));
}

std::vector<Rational> b_coefficients(unsigned K) {
    const TruncatedSeries s = t_over_tanh_series(K);
    std::vector<Rational> b;
    for (unsigned k = 0; k <= K; ++k)
        b.push_back(s[2 * std::size_t{k}]);
    return b;
}

std::vector<EMonomial> e_basis(unsigned m) {
    std::vector<EMonomial> out;
    for (unsigned k = 0; 2 * k <= m; ++k)
        for (unsigned i = 0; i + 2 * k <= m; ++i)
            for (unsigned j = 0; j + 2 * k <= m; ++j) {
                if (k == 0 && j >= m / 2)
                    continue;
                out.push_back({i, j, k});
            }
    std::sort(out.begin(), out.end(), [](const EMonomial& a, const EMonomial& b) {
        return std::tuple(a.degree(), a.i, a.j, a.k) < std::tuple(b.degree(), b.i, b.j, b.k);
    });
    return out;
}

TruncatedSeries e_hilbert(unsigned m) {
    std::vector<Rational> coeffs(6 * std::size_t{m} + 1);
    for (const auto& e : e_basis(m))
        coeffs.at(e.degree()) += Rational(1);
    return TruncatedSeries(std::move(coeffs));
}

BettiTable ih_series_structural(unsigned g) {
    require_genus(g);
    BettiTable table{g, {}, Route::structural};
    const std::size_t top = table.top_degree();
    table.coefficients.assign(top + 1, 0);
    for (unsigned l = 0; l <= g; ++l) {
        const std::uint64_t prim = prim_dimension_formula(g, l);
        const TruncatedSeries e = e_hilbert(g - l);
        for (std::size_t d = 0; d <= e.order(); ++d) {
            if (e[d].is_zero())
                continue;
            const std::size_t degree = d + 3 * std::size_t{l};
            if (degree > top)
                throw ComputationError("structural intersection series exceeds degree 6g-6 at t^" +
                                       std::to_string(degree));
            table.coefficients[degree] += prim * static_cast<std::uint64_t>(e[d].to_int64());
        }
    }
    return table;
}

TruncatedSeries equivariant_series_structural(unsigned g, std::size_t order, BasisCache& cache) {
    require_genus(g);
    std::vector<Rational> coeffs(order + 1);
    for (unsigned l = 0; l <= g; ++l) {
        const std::size_t shift = 3 * std::size_t{l};
        if (shift > order)
            continue;
        const auto basis = cache.get(g - l);
        const TruncatedSeries quotient = series_expand(hilbert_series_quotient(leading_term_ideal(*basis)), order - shift);
        const Rational prim(static_cast<std::int64_t>(prim_dimension_formula(g, l)));
        for (std::size_t d = 0; d <= quotient.order(); ++d)
            coeffs[d + shift] += prim * quotient[d];
    }
    return TruncatedSeries(std::move(coeffs));
}

}  // namespace ihrep
