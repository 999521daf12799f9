#include "ihrep/report.hpp"

#include "ihrep/exterior.hpp"
#include "ihrep/ih_assembly.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

namespace ihrep {

std::string to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::skipped:
        return "skipped";
    }
    return "unknown";
}

bool VerificationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
}

std::vector<Rational> tanh_over_t_by_ode(std::size_t order) {
    // T = sum a_n t^n with a_0 = 0; (n+1) a_{n+1} = [n == 0] - sum_{i+j=n} a_i a_j.
    std::vector<Rational> tanh(order + 2);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational rhs = n == 0 ? Rational(1) : Rational();
        for (std::size_t i = 0; i <= n; ++i)
            rhs -= tanh[i] * tanh[n - i];
        tanh[n + 1] = rhs / Rational(static_cast<std::int64_t>(n) + 1);
    }
    return {tanh.begin() + 1, tanh.end()};
}

namespace {

struct Context {
    unsigned g;
    std::size_t order;
    unsigned cap;
    BasisCache& cache;
};

CheckRecord make(const std::string& name, unsigned g) {
    CheckRecord r;
    r.name = name;
    r.genus = g;
    return r;
}

CheckRecord skip(CheckRecord r, const std::string& why) {
    r.status = CheckStatus::skipped;
    r.details = why;
    return r;
}

CheckRecord verdict(CheckRecord r, bool ok, std::string details) {
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    r.details = std::move(details);
    return r;
}

std::string cap_reason(unsigned g, unsigned cap) {
    return "genus " + std::to_string(g) + " exceeds the Groebner cap " + std::to_string(cap);
}

template <class Sequence>
std::optional<std::size_t> first_difference(const Sequence& a, const Sequence& b, std::size_t length) {
    for (std::size_t d = 0; d < length; ++d)
        if (!(a[d] == b[d]))
            return d;
    return std::nullopt;
}

CheckRecord intersection_routes(const Context& c) {
    auto r = make("intersection-route-agreement", c.g);
    const auto closed = ip_series_closed(c.g, c.order);
    const auto structural = ih_series_structural(c.g);
    const std::size_t n = closed.coefficients.size();
    if (auto d = first_difference(closed.coefficients, structural.coefficients, n)) {
        r.first_mismatch_degree = d;
        return verdict(r, false,
                       "t^" + std::to_string(*d) + ": closed " + std::to_string(closed.coefficients[*d]) +
                           ", structural " + std::to_string(structural.coefficients[*d]));
    }
    return verdict(r, true, "closed and structural tables agree in degrees 0.." + std::to_string(n - 1));
}

CheckRecord equivariant_routes(const Context& c) {
    auto r = make("equivariant-route-agreement", c.g);
    if (c.g > c.cap)
        return skip(r, cap_reason(c.g, c.cap));
    const auto closed = equivariant_series_closed(c.g, c.order);
    const auto structural = equivariant_series_structural(c.g, c.order, c.cache);
    if (auto d = first_difference(closed, structural, c.order + 1)) {
        r.first_mismatch_degree = d;
        return verdict(r, false,
                       "t^" + std::to_string(*d) + ": closed " + closed[*d].to_string() + ", structural " +
                           structural[*d].to_string());
    }
    return verdict(r, true, "series agree through t^" + std::to_string(c.order));
}

CheckRecord polynomiality(const Context& c) {
    auto r = make("polynomiality", c.g);
    const std::size_t top = 6 * std::size_t{c.g} - 6;
    const auto diff = equivariant_series_closed(c.g, c.order) - correction_series(c.g, c.order);
    for (std::size_t d = top + 1; d <= c.order; ++d)
        if (!diff[d].is_zero()) {
            r.first_mismatch_degree = d;
            return verdict(r, false, "coefficient of t^" + std::to_string(d) + " is " + diff[d].to_string());
        }
    return verdict(r, true,
                   "difference vanishes in degrees " + std::to_string(top + 1) + ".." + std::to_string(c.order));
}

CheckRecord duality(const Context& c) {
    auto r = make("duality", c.g);
    const auto table = ip_series_closed(c.g, c.order);
    if (table.coefficients.front() != 1)
        return verdict(r, false, "degree-0 Betti number is " + std::to_string(table.coefficients.front()));
    const auto& b = table.coefficients;
    for (std::size_t d = 0; d < b.size(); ++d)
        if (b[d] != b[b.size() - 1 - d]) {
            r.first_mismatch_degree = d;
            return verdict(r, false,
                           "t^" + std::to_string(d) + " has " + std::to_string(b[d]) + " but t^" +
                               std::to_string(b.size() - 1 - d) + " has " + std::to_string(b[b.size() - 1 - d]));
        }
    return verdict(r, true,
                   "palindromic about degree " + std::to_string(table.top_degree() / 2) + ", total dimension " +
                       std::to_string(table.total_dimension()));
}

CheckRecord e_independence(const Context& c) {
    auto r = make("e-independence", c.g);
    if (c.g > c.cap)
        return skip(r, cap_reason(c.g, c.cap));
    std::ostringstream sizes;
    for (unsigned m = 0; m <= c.g; ++m) {
        const auto v = e_basis_independence(m, c.cache, c.cap);
        if (!v.passed()) {
            r.first_mismatch_degree = v.failing_degree;
            std::ostringstream why;
            why << "E_" << m << " normal forms are dependent in degree " << v.failing_degree.value_or(0)
                << " (rank " << v.rank << " of " << v.size << ")";
            return verdict(r, false, why.str());
        }
        sizes << (m == 0 ? "" : ", ") << v.size;
    }
    return verdict(r, true, "E_0..E_" + std::to_string(c.g) + " have full rank; sizes " + sizes.str());
}

CheckRecord b_series_inverse(const Context& c) {
    auto r = make("b-series-inverse", c.g);
    const unsigned K = std::max(12U, c.g);
    const auto product = series_mul(t_over_tanh_series(K), TruncatedSeries(tanh_over_t_by_ode(2 * K)));
    const auto one = TruncatedSeries::one(2 * K);
    if (auto d = first_difference(product, one, 2 * std::size_t{K} + 1)) {
        r.first_mismatch_degree = d;
        return verdict(r, false, "product has coefficient " + product[*d].to_string() + " at t^" +
                                     std::to_string(*d));
    }
    const auto b = b_coefficients(2);
    if (!(b[0] == Rational(1) && b[1] == Rational(1, 3) && b[2] == Rational(-1, 45)))
        return verdict(r, false, "b_0, b_1, b_2 = " + b[0].to_string() + ", " + b[1].to_string() + ", " +
                                     b[2].to_string());
    return verdict(r, true, "(t/tanh t)(tanh t/t) = 1 through t^" + std::to_string(2 * K) +
                                "; b_0, b_1, b_2 = 1, 1/3, -1/45");
}

CheckRecord lefschetz(const Context& c) {
    auto r = make("lefschetz-identity", c.g);
    Rational total;
    for (unsigned l = 0; l <= c.g; ++l)
        total += Rational(static_cast<std::int64_t>(prim_dimension_formula(c.g, l))) *
                 Rational(static_cast<std::int64_t>(c.g - l + 1));
    const Rational expected = power(Rational(4), c.g);
    return verdict(r, total == expected,
                   "sum over l of dim Prim_l (g-l+1) = " + total.to_string() + ", 4^g = " + expected.to_string());
}

CheckRecord prim_bruteforce(const Context& c) {
    auto r = make("prim-formula-bruteforce", c.g);
    if (c.g > kBruteForceMaxGenus)
        return skip(r, "brute-force kernel ranks are limited to genus " + std::to_string(kBruteForceMaxGenus));
    for (unsigned l = 0; l <= c.g; ++l) {
        const auto brute = prim_dimension_bruteforce(c.g, l);
        const auto formula = prim_dimension_formula(c.g, l);
        if (brute != formula)
            return verdict(r, false, "l=" + std::to_string(l) + ": kernel rank " + std::to_string(brute) +
                                         ", formula " + std::to_string(formula));
    }
    return verdict(r, true, "kernel dimensions match the formula for l = 0.." + std::to_string(c.g));
}

CheckRecord restriction(const Context& c) {
    auto r = make("restriction-invariant-dimensions", c.g);
    if (c.g > kRestrictionMaxGenus)
        return skip(r, "restriction image brute force is limited to genus " + std::to_string(kRestrictionMaxGenus));
    const unsigned U = 3 * c.g + 6;
    const unsigned limit = reliable_degree_limit(c.g, U);
    const auto image = restriction_image_dimensions(c.g, U);
    const auto invariant = invariant_truncated_dimensions(c.g, U);
    const auto closed = correction_series(c.g, limit);
    for (unsigned d = 0; d <= limit; ++d) {
        const Rational a(static_cast<std::int64_t>(image.at(d)));
        const Rational b(static_cast<std::int64_t>(invariant.at(d)));
        if (!(a == b && b == closed[d])) {
            r.first_mismatch_degree = d;
            return verdict(r, false,
                           "t^" + std::to_string(d) + ": image " + a.to_string() + ", invariant " + b.to_string() +
                               ", correction series " + closed[d].to_string());
        }
    }
    return verdict(r, true, "image, invariant part and correction series agree in degrees 0.." +
                                std::to_string(limit) + " (u-truncation " + std::to_string(U) + ")");
}

CheckRecord top_identity(const Context& c) {
    auto r = make("top-identity", c.g);
    if (c.g > c.cap)
        return skip(r, cap_reason(c.g, c.cap));
    const auto v = top_identity_check(c.g, c.cache, c.cap);
    const std::string dimension = "top-degree piece of the quotient has dimension " +
                                  std::to_string(v.top_degree_dimension);
    for (const auto& e : v.entries) {
        const std::string where = "(m,n)=(" + std::to_string(e.m) + "," + std::to_string(e.n) + ")";
        if (!e.passed())
            return verdict(r, false, where + ": residual " + e.residual.to_string() + "; " + dimension);
        if (!e.pairing_consistent())
            return verdict(r, false,
                           where + ": ring pairing " + (e.ring_pairing ? e.ring_pairing->to_string() : "undefined") +
                               ", formula " + e.formula_pairing.to_string() + "; " + dimension);
    }
    const bool single = v.entries.size() == 1;
    const std::string summary = std::to_string(v.entries.size()) +
                                (single ? " identity holds and matches" : " identities hold and match");
    return verdict(r, true, summary + " the pairing formula; " + dimension);
}

using CheckFn = CheckRecord (*)(const Context&);

struct NamedCheck {
    const char* name;
    CheckFn run;
};

constexpr NamedCheck kChecks[] = {
    {"intersection-route-agreement", intersection_routes},
    {"equivariant-route-agreement", equivariant_routes},
    {"polynomiality", polynomiality},
    {"duality", duality},
    {"e-independence", e_independence},
    {"b-series-inverse", b_series_inverse},
    {"lefschetz-identity", lefschetz},
    {"prim-formula-bruteforce", prim_bruteforce},
    {"restriction-invariant-dimensions", restriction},
    {"top-identity", top_identity},
};

CheckRecord guarded(const NamedCheck& check, const Context& c) {
    try {
        return check.run(c);
    } catch (const std::exception& e) {
        return verdict(make(check.name, c.g), false, std::string("error: ") + e.what());
    }
}

}  // namespace

const std::vector<std::string>& verification_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& c : kChecks)
            out.emplace_back(c.name);
        return out;
    }();
    return names;
}

VerificationReport run_verification(unsigned g, const VerificationOptions& options, BasisCache& cache) {
    if (g < 2)
        throw std::invalid_argument("genus must be at least 2");
    const Context context{g, options.order.value_or(default_order(g)), options.groebner_cap, cache};
    if (context.order < 6 * std::size_t{g} - 6)
        throw std::invalid_argument("order must be at least 6g-6");

    const auto policy = options.concurrent ? std::launch::async : std::launch::deferred;
    std::vector<std::future<CheckRecord>> pending;
    for (const auto& check : kChecks)
        pending.push_back(std::async(policy, guarded, std::cref(check), std::cref(context)));

    VerificationReport report;
    report.genus = g;
    for (auto& f : pending)
        report.checks.push_back(f.get());
    return report;
}

}  // namespace ihrep
