#include "ihrep/groebner.hpp"
#include "ihrep/ih_assembly.hpp"
#include "ihrep/linalg.hpp"

#include <algorithm>
#include <map>

namespace ihrep {

namespace {

Rational signed_power_of_four(unsigned exponent) { return power(Rational(-4), exponent); }

// -(-4)^{g-1} m! b_{g-n-1}
Rational pairing_formula(unsigned g, unsigned m, unsigned n) {
    const auto b = b_coefficients(g - n - 1);
    return -signed_power_of_four(g - 1) * factorial(m) * b.back();
}

}  // namespace

IndependenceVerdict e_basis_independence(unsigned m, BasisCache& cache, unsigned max_m) {
    if (m > max_m)
        throw std::invalid_argument("E-basis independence is capped at m <= " + std::to_string(max_m));
    IndependenceVerdict verdict;
    verdict.m = m;
    const auto monomials = e_basis(m);
    verdict.size = monomials.size();
    if (monomials.empty())
        return verdict;
    const auto basis = cache.get(m);

    std::map<unsigned, std::vector<EMonomial>> by_degree;
    for (const auto& e : monomials)
        by_degree[e.degree()].push_back(e);

    for (const auto& [degree, group] : by_degree) {
        std::vector<GradedPoly> forms;
        std::map<Monomial3, std::size_t, LeadingFirst> coordinate;
        for (const auto& e : group) {
            forms.push_back(basis->normal_form(expand_abxi_monomial(e.i, e.j, e.k)));
            for (const auto& [mono, c] : forms.back().terms())
                coordinate.emplace(mono, 0);
        }
        std::size_t next = 0;
        for (auto& [mono, index] : coordinate)
            index = next++;
        // Columns are the E_m monomials, rows the standard monomials.
        RationalMatrix matrix(coordinate.size(), std::vector<Rational>(forms.size()));
        for (std::size_t col = 0; col < forms.size(); ++col)
            for (const auto& [mono, c] : forms[col].terms())
                matrix[coordinate.at(mono)][col] = c;
        const std::size_t r = rank(matrix);
        verdict.rank += r;
        if (r < forms.size() && !verdict.failing_degree) {
            verdict.failing_degree = degree;
            verdict.dependency = kernel_basis(std::move(matrix), forms.size()).front();
        }
    }
    return verdict;
}

GradedPoly fundamental_class(unsigned g) {
    if (g < 2)
        throw std::invalid_argument("genus must be at least 2");
    const Rational scale = (factorial(g - 2) * signed_power_of_four(g - 1)).inverse();
    return scale * expand_abxi_monomial(g - 2, g - 2, 1);
}

bool TopIdentityVerdict::passed() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const TopIdentityEntry& e) { return e.passed() && e.pairing_consistent(); });
}

TopIdentityVerdict top_identity_check(unsigned g, BasisCache& cache, unsigned max_genus) {
    if (g < 2 || g > max_genus)
        throw std::invalid_argument("top identity check needs 2 <= g <= " + std::to_string(max_genus));
    const auto basis = cache.get(g);
    const GradedPoly top = expand_abxi_monomial(g - 2, g - 2, 1);
    const GradedPoly top_form = basis->normal_form(top);
    const auto b = b_coefficients(g);
    const Rational normalization = factorial(g - 2) * signed_power_of_four(g - 1);

    TopIdentityVerdict verdict;
    verdict.genus = g;
    const std::size_t top_degree = 6 * std::size_t{g} - 6;
    verdict.top_degree_dimension = static_cast<std::uint64_t>(
        series_expand(hilbert_series_quotient(leading_term_ideal(*basis)), top_degree)[top_degree].to_int64());

    for (unsigned n = 0; n + 1 < g; ++n) {
        TopIdentityEntry entry;
        entry.n = n;
        entry.m = 3 * g - 3 - 2 * n;
        entry.predicted_coefficient = -factorial(entry.m) * b[g - n - 1] / factorial(g - 2);
        const GradedPoly lhs = GradedPoly::monomial(Monomial3{entry.m, n, 0});
        entry.residual = basis->normal_form(lhs - entry.predicted_coefficient * top);

        const GradedPoly lhs_form = basis->normal_form(lhs);
        if (!top_form.is_zero()) {
            const Rational c = lhs_form.coefficient(top_form.leading_monomial()) / top_form.leading_coefficient();
            if (lhs_form == c * top_form) {
                entry.ring_coefficient = c;
                entry.ring_pairing = c * normalization;
            }
        }
        entry.formula_pairing = pairing_formula(g, entry.m, n);
        verdict.entries.push_back(std::move(entry));
    }
    return verdict;
}

Rational pairing_value(unsigned g, std::pair<unsigned, unsigned> left, std::pair<unsigned, unsigned> right) {
    if (g < 2)
        throw std::invalid_argument("genus must be at least 2");
    const unsigned m = left.first + right.first;
    const unsigned n = left.second + right.second;
    if (m + 2 * n != 3 * g - 3 || n + 1 >= g)
        throw std::invalid_argument("pairing formula needs m + 2n = 3g-3 and n < g-1; got m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n) + " at g=" + std::to_string(g));
    return pairing_formula(g, m, n);
}

std::vector<PairingEntry> pairing_matrix(unsigned g) {
    if (g < 2)
        throw std::invalid_argument("genus must be at least 2");
    std::vector<PairingEntry> out;
    for (unsigned n = 0; n + 1 < g; ++n) {
        const unsigned m = 3 * g - 3 - 2 * n;
        const Rational value = pairing_formula(g, m, n);
        for (unsigned i = 0; i <= m; ++i)
            for (unsigned j = 0; j <= n; ++j)
                out.push_back({{i, j}, {m - i, n - j}, m, n, value});
    }
    return out;
}

}  // namespace ihrep
