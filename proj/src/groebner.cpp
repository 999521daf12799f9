#include "ihrep/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ihrep {

// --- division ----------------------------------------------------------------

GradedPoly reduce(const GradedPoly& p, std::span<const GradedPoly> divisors) {
    GradedPoly remainder;
    GradedPoly work = p;
    while (!work.is_zero()) {
        const Monomial3 lm = work.leading_monomial();
        const Rational lc = work.leading_coefficient();
        const auto divisor = std::find_if(divisors.begin(), divisors.end(), [&](const GradedPoly& d) {
            return d.leading_monomial().divides(lm);
        });
        if (divisor == divisors.end()) {
            remainder.add_term(lm, lc);
            work.add_term(lm, -lc);
            continue;
        }
        work -= divisor->times_term(lm / divisor->leading_monomial(), lc / divisor->leading_coefficient());
    }
    return remainder;
}

GradedPoly s_polynomial(const GradedPoly& f, const GradedPoly& g) {
    const Monomial3 l = lcm(f.leading_monomial(), g.leading_monomial());
    return f.times_term(l / f.leading_monomial(), f.leading_coefficient().inverse()) -
           g.times_term(l / g.leading_monomial(), g.leading_coefficient().inverse());
}

bool is_reduced_basis(std::span<const GradedPoly> generators) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const GradedPoly& g = generators[i];
        if (g.is_zero() || !g.leading_coefficient().is_one())
            return false;
        for (std::size_t j = 0; j < generators.size(); ++j) {
            if (i == j)
                continue;
            const Monomial3& lm = generators[j].leading_monomial();
            for (const auto& [m, c] : g.terms())
                if (lm.divides(m))
                    return false;
        }
    }
    return true;
}

// --- GroebnerBasis -----------------------------------------------------------

namespace {

void sort_by_leading_monomial(std::vector<GradedPoly>& gens) {
    std::sort(gens.begin(), gens.end(), [](const GradedPoly& a, const GradedPoly& b) {
        return MonomialOrder::compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
}

constexpr std::string_view kHeaderPrefix = "groebner-basis order=";

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<GradedPoly> generators, std::optional<unsigned> source_k)
    : source_k_(source_k) {
    for (auto& g : generators) {
        if (g.is_zero())
            throw std::invalid_argument("zero polynomial in a Groebner basis");
        generators_.push_back(g.monic());
    }
    if (generators_.empty())
        throw std::invalid_argument("empty Groebner basis");
    sort_by_leading_monomial(generators_);
    if (!is_reduced_basis(generators_))
        throw std::invalid_argument("generators do not form a reduced basis");
}

GradedPoly GroebnerBasis::normal_form(const GradedPoly& p) const { return reduce(p, generators_); }

bool GroebnerBasis::s_polynomials_reduce_to_zero() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (!normal_form(s_polynomial(generators_[i], generators_[j])).is_zero())
                return false;
    return true;
}

std::string GroebnerBasis::to_canonical_text() const {
    std::ostringstream os;
    os << kHeaderPrefix << order_name() << '\n';
    if (source_k_)
        os << "k " << *source_k_ << '\n';
    for (const auto& g : generators_)
        os << "gen " << g.to_string() << '\n';
    return os.str();
}

GroebnerBasis GroebnerBasis::parse_canonical_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line) || line != std::string(kHeaderPrefix) + std::string(order_name()))
        throw std::invalid_argument("not a Groebner basis in canonical text form");
    std::optional<unsigned> k;
    std::vector<GradedPoly> gens;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        if (line.rfind("k ", 0) == 0) {
            const std::string digits = line.substr(2);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad k line: " + line);
            k = static_cast<unsigned>(std::stoul(digits));
        } else if (line.rfind("gen ", 0) == 0) {
            gens.push_back(GradedPoly::parse(line.substr(4)));
        } else {
            throw std::invalid_argument("unexpected line: " + line);
        }
    }
    return GroebnerBasis(std::move(gens), k);
}

// --- Buchberger ----------------------------------------------------------------

std::vector<GradedPoly> ideal_generators(unsigned k) {
    return {mumford_c(k + 1), mumford_c(k + 2), mumford_c(k + 3)};
}

namespace {

struct CriticalPair {
    Monomial3 lcm;
    std::size_t first;
    std::size_t second;
};

// Normal strategy: smallest lcm first; indices make the choice deterministic.
struct PairPriority {
    bool operator()(const CriticalPair& a, const CriticalPair& b) const {
        if (auto c = MonomialOrder::compare(a.lcm, b.lcm); c != 0)
            return c < 0;
        return std::tie(a.second, a.first) < std::tie(b.second, b.first);
    }
};

}  // namespace

GroebnerBasis buchberger(std::span<const GradedPoly> gens, std::optional<unsigned> source_k) {
    std::vector<GradedPoly> basis;
    std::set<CriticalPair, PairPriority> pairs;
    const auto insert = [&](GradedPoly p) {
        p = p.monic();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Monomial3& a = basis[i].leading_monomial();
            const Monomial3& b = p.leading_monomial();
            if (!coprime(a, b))
                pairs.insert({lcm(a, b), i, basis.size()});
        }
        basis.push_back(std::move(p));
    };

    for (const auto& g : gens) {
        GradedPoly r = reduce(g, basis);
        if (!r.is_zero())
            insert(std::move(r));
    }
    if (basis.empty())
        throw std::invalid_argument("buchberger needs a nonzero generator");

    while (!pairs.empty()) {
        const CriticalPair pair = *pairs.begin();
        pairs.erase(pairs.begin());
        GradedPoly r = reduce(s_polynomial(basis[pair.first], basis[pair.second]), basis);
        if (!r.is_zero())
            insert(std::move(r));
    }

    // Minimalize, then interreduce tails.
    sort_by_leading_monomial(basis);
    std::vector<GradedPoly> minimal;
    for (auto& g : basis) {
        const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const GradedPoly& kept) {
            return kept.leading_monomial().divides(g.leading_monomial());
        });
        if (!redundant)
            minimal.push_back(std::move(g));
    }
    std::vector<GradedPoly> reduced;
    reduced.reserve(minimal.size());
    for (const auto& g : minimal) {
        GradedPoly head = GradedPoly::monomial(g.leading_monomial(), g.leading_coefficient());
        reduced.push_back(head + reduce(g - head, minimal));
    }
    return GroebnerBasis(std::move(reduced), source_k);
}

GroebnerBasis relation_ideal_basis(unsigned k) {
    const auto gens = ideal_generators(k);
    return buchberger(gens, k);
}

// --- monomial ideals and Hilbert series -------------------------------------

MonomialIdeal::MonomialIdeal(std::vector<Monomial3> generators) : generators_(std::move(generators)) {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = 0; j < generators_.size(); ++j)
            if (i != j && generators_[i].divides(generators_[j]))
                throw std::invalid_argument("monomial ideal generators must form an antichain");
}

bool MonomialIdeal::contains(const Monomial3& m) const {
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](const Monomial3& g) { return g.divides(m); });
}

MonomialIdeal leading_term_ideal(const GroebnerBasis& basis) {
    std::vector<Monomial3> lms;
    for (const auto& g : basis.generators())
        lms.push_back(g.leading_monomial());
    return MonomialIdeal(std::move(lms));
}

namespace {

using Numerator = std::map<std::uint64_t, std::int64_t>;

std::vector<Monomial3> minimal_generators(std::vector<Monomial3> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial3& x, const Monomial3& y) {
        return MonomialOrder::compare(x, y) < 0;
    });
    std::vector<Monomial3> out;
    for (const auto& m : gens)
        if (std::none_of(out.begin(), out.end(), [&](const Monomial3& kept) { return kept.divides(m); }))
            out.push_back(m);
    return out;
}

// Alternating sum of t^{deg lcm(S)} over subsets S, grouped by the last
// generator: N(G + m) = N(G) - t^{deg m} N((G : m)). Subsets whose lcm terms
// cancel are dropped by minimalizing each colon ideal.
Numerator lcm_numerator(const std::vector<Monomial3>& gens) {
    Numerator result{{0, 1}};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Monomial3> colon;
        for (std::size_t j = 0; j < i; ++j)
            colon.push_back(lcm(gens[j], gens[i]) / gens[i]);
        const std::uint64_t shift = gens[i].weighted_degree();
        for (const auto& [degree, count] : lcm_numerator(minimal_generators(std::move(colon))))
            result[degree + shift] -= count;
    }
    std::erase_if(result, [](const auto& entry) { return entry.second == 0; });
    return result;
}

}  // namespace

RationalFunctionT hilbert_series_quotient(const MonomialIdeal& ideal) {
    if (ideal.generators().size() > kHilbertGeneratorCap)
        throw std::length_error("Hilbert series is capped at " +
                                std::to_string(kHilbertGeneratorCap) + " generators");
    const Numerator terms =
        lcm_numerator(std::vector<Monomial3>(ideal.generators().begin(), ideal.generators().end()));
    const std::uint64_t top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Rational> coeffs(top + 1);
    for (const auto& [degree, count] : terms)
        coeffs[degree] += Rational(count);
    const Polynomial denominator = Polynomial::binomial(-1, Monomial3::kAlphaWeight) *
                                   Polynomial::binomial(-1, Monomial3::kBetaWeight) *
                                   Polynomial::binomial(-1, Monomial3::kGammaWeight);
    return RationalFunctionT(Polynomial(std::move(coeffs)), denominator);
}

}  // namespace ihrep
