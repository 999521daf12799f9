#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the series division, Groebner, or exterior-algebra code it is used to check.

#include "ihrep/rational.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using ihrep::Rational;

/// Number of (a_1..a_r) >= 0 with sum w_i a_i = d.
inline std::uint64_t count_weighted_solutions(const std::vector<unsigned>& weights, unsigned d) {
    std::function<std::uint64_t(std::size_t, unsigned)> go = [&](std::size_t i, unsigned rest) -> std::uint64_t {
        if (i == weights.size())
            return rest == 0 ? 1 : 0;
        std::uint64_t total = 0;
        for (unsigned used = 0; used <= rest; used += weights[i])
            total += go(i + 1, rest - used);
        return total;
    };
    return go(0, d);
}

inline std::int64_t choose(int n, int k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// Bernoulli numbers B_0..B_n (B_1 = -1/2) from sum_{j<=m} C(m+1,j) B_j = 0.
inline std::vector<Rational> bernoulli(unsigned n) {
    std::vector<Rational> b(n + 1);
    b[0] = Rational(1);
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc;
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(choose(static_cast<int>(m) + 1, static_cast<int>(j))) * b[j];
        b[m] = -acc / Rational(static_cast<std::int64_t>(m) + 1);
    }
    return b;
}

/// Taylor coefficients of t/tanh t from Bernoulli numbers: 2^{2k} B_{2k} / (2k)!.
inline std::vector<Rational> t_over_tanh_from_bernoulli(unsigned K) {
    const auto B = bernoulli(2 * K);
    std::vector<Rational> out;
    for (unsigned k = 0; k <= K; ++k)
        out.push_back(ihrep::power(Rational(4), k) * B[2 * k] / ihrep::factorial(2 * k));
    return out;
}

/// Coefficients of tanh(t)/t through t^order from the ODE tanh' = 1 - tanh^2.
inline std::vector<Rational> tanh_over_t(unsigned order) {
    std::vector<Rational> tanh(order + 2);
    for (unsigned n = 0; n + 1 <= order + 1; ++n) {
        Rational rhs = n == 0 ? Rational(1) : Rational();
        for (unsigned i = 0; i <= n; ++i)
            rhs -= tanh[i] * tanh[n - i];
        tanh[n + 1] = rhs / Rational(static_cast<std::int64_t>(n) + 1);
    }
    return std::vector<Rational>(tanh.begin() + 1, tanh.end());
}

/// Coefficients of ((1+t^3)^{2g} - t^{2g+2}(1+t)^{2g}) / ((1-t^2)(1-t^4)) via
/// binomial numerators convolved with partition counts.
inline std::vector<std::int64_t> equivariant_closed_form(unsigned g, unsigned order) {
    std::vector<std::int64_t> numerator(order + 1);
    for (unsigned k = 0; k <= 2 * g && 3 * k <= order; ++k)
        numerator[3 * k] += choose(2 * g, k);
    for (unsigned k = 0; k <= 2 * g && 2 * g + 2 + k <= order; ++k)
        numerator[2 * g + 2 + k] -= choose(2 * g, k);
    std::vector<std::int64_t> out(order + 1);
    for (unsigned d = 0; d <= order; ++d)
        for (unsigned i = 0; i <= d; ++i)
            out[d] += numerator[i] * static_cast<std::int64_t>(count_weighted_solutions({2, 4}, d - i));
    return out;
}

/// dim of the involution-invariant part of H*(Jac) (x) u^{g-1} Q[u] in degree d:
/// pairs (S, e) with e >= g-1, |S| + e even, |S| + 2e = d.
inline std::vector<std::int64_t> correction_by_count(unsigned g, unsigned order) {
    std::vector<std::int64_t> out(order + 1);
    for (unsigned size = 0; size <= 2 * g; ++size)
        for (unsigned e = g - 1; size + 2 * e <= order; ++e)
            if ((size + e) % 2 == 0)
                out[size + 2 * e] += choose(2 * g, size);
    return out;
}

}  // namespace oracle
