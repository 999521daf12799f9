#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihrep/exterior.hpp"
#include "ihrep/ih_assembly.hpp"
#include "oracles.hpp"

#include <random>

using namespace ihrep;

namespace {

ExtElement random_homogeneous(std::mt19937_64& rng, const std::vector<unsigned>& degrees, unsigned size) {
    std::uniform_int_distribution<std::int64_t> c(-3, 3);
    std::uniform_int_distribution<GeneratorMask> pick(0, (GeneratorMask{1} << degrees.size()) - 1);
    ExtElement x(degrees);
    for (int t = 0; t < 4; ++t) {
        GeneratorMask m = pick(rng);
        while (static_cast<unsigned>(std::popcount(m)) != size)
            m = pick(rng);
        x.add_term(m, Rational(c(rng)));
    }
    return x;
}

}  // namespace

TEST_CASE("wedge sign") {
    CHECK(wedge_sign(0b01, 0b10) == 1);
    CHECK(wedge_sign(0b10, 0b01) == -1);
    CHECK(wedge_sign(0b11, 0b01) == 0);
    CHECK(wedge_sign(0b101, 0b010) == -1);
    CHECK(wedge_sign(0, 0b111) == 1);
}

TEST_CASE("exterior products are associative and graded commutative") {
    const auto degrees = psi_degrees(3);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const auto x = random_homogeneous(rng, degrees, 1);
        const auto y = random_homogeneous(rng, degrees, 2);
        const auto z = random_homogeneous(rng, degrees, 1);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * z == Rational(-1) * (z * x));
        CHECK(x * y == y * x);
        CHECK((x * x).is_zero());
    }
}

TEST_CASE("gamma") {
    const auto degrees = psi_degrees(2);
    const auto gamma = gamma_element(2);
    CHECK(gamma.coefficient(0b0101) == Rational(-2));
    CHECK(gamma.coefficient(0b1010) == Rational(-2));
    CHECK(gamma.terms().size() == 2);
    CHECK(gamma.degree_of(0b0101) == 6);
    // psi1 psi3 psi2 psi4 = -psi1 psi2 psi3 psi4, twice, times 4.
    const auto square = gamma * gamma;
    CHECK(square.terms().size() == 1);
    CHECK(square.coefficient(0b1111) == Rational(-8));
    for (unsigned g = 2; g <= 5; ++g) {
        CHECK_FALSE(pow(gamma_element(g), g).is_zero());
        CHECK(pow(gamma_element(g), g + 1).is_zero());
    }
    CHECK(ExtElement::one(degrees) * gamma == gamma);
}

TEST_CASE("primitive dimensions") {
    CHECK(prim_dimension_formula(2, 0) == 1);
    CHECK(prim_dimension_formula(2, 1) == 4);
    CHECK(prim_dimension_formula(2, 2) == 5);
    CHECK(prim_dimension_formula(6, 6) == 429);
    for (unsigned l = 0; l <= 2; ++l)
        CHECK(prim_dimension_bruteforce(2, l) == prim_dimension_formula(2, l));
    for (unsigned g = 3; g <= 4; ++g)
        for (unsigned l = 0; l <= g; ++l) {
            CAPTURE(g);
            CAPTURE(l);
            CHECK(prim_dimension_bruteforce(g, l) == prim_dimension_formula(g, l));
        }
    CHECK_THROWS_AS(prim_dimension_bruteforce(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(prim_dimension_bruteforce(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(prim_dimension_bruteforce(3, 4), std::invalid_argument);
}

TEST_CASE("Lefschetz sum is 4^g") {
    for (unsigned g = 2; g <= 12; ++g) {
        std::uint64_t total = 0;
        for (unsigned l = 0; l <= g; ++l)
            total += prim_dimension_formula(g, l) * (g - l + 1);
        CHECK(total == (std::uint64_t{1} << (2 * g)));
    }
    std::uint64_t g3 = 0;
    for (unsigned l = 0; l <= 3; ++l)
        g3 += prim_dimension_bruteforce(3, l) * (3 - l + 1);
    CHECK(g3 == 64);
}

TEST_CASE("binomial") {
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(4, -2) == 0);
    CHECK(binomial(4, 5) == 0);
    for (int n = 0; n <= 30; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(static_cast<unsigned>(n), k) == static_cast<std::uint64_t>(oracle::choose(n, k)));
}

TEST_CASE("Jacobian model") {
    const auto w = JacElement::alpha_image(2, 6);
    CHECK(w.terms().size() == 2);
    CHECK(w.is_involution_invariant());
    CHECK(JacElement::beta_image(2, 6).is_involution_invariant());
    CHECK(JacElement::psi_image(2, 6, 0).is_involution_invariant());
    JacElement odd(2, 6);
    odd.add_term(0b1, 0, Rational(1));
    CHECK_FALSE(odd.is_involution_invariant());
    // u-truncation drops high powers.
    const auto beta = JacElement::beta_image(2, 3);
    CHECK((beta * beta).is_zero());
    CHECK(reliable_degree_limit(3, 15) == 24);
}

TEST_CASE("invariant truncated dimensions") {
    const auto dims = invariant_truncated_dimensions(2, 12);
    const std::vector<std::uint64_t> expected{0, 0, 0, 4, 1, 4, 6};
    for (unsigned d = 0; d < expected.size(); ++d)
        CHECK(dims.at(d) == expected[d]);
    for (unsigned g = 2; g <= 5; ++g) {
        const unsigned U = 3 * g + 6;
        const auto counted = invariant_truncated_dimensions(g, U);
        const auto closed = correction_series(g, reliable_degree_limit(g, U));
        const auto oracle_counts = oracle::correction_by_count(g, reliable_degree_limit(g, U));
        REQUIRE(counted.size() == reliable_degree_limit(g, U) + 1);
        for (const auto& [d, dim] : counted) {
            CHECK(Rational(static_cast<std::int64_t>(dim)) == closed[d]);
            CHECK(static_cast<std::int64_t>(dim) == oracle_counts[d]);
        }
    }
}

TEST_CASE("restriction image equals the invariant part") {
    for (unsigned g = 2; g <= kRestrictionMaxGenus; ++g) {
        const unsigned U = 3 * g + 6;
        const auto image = restriction_image_dimensions(g, U);
        const auto invariant = invariant_truncated_dimensions(g, U);
        CHECK(image == invariant);
    }
    CHECK_THROWS_AS(restriction_image_dimensions(4, 20), std::invalid_argument);
    CHECK_THROWS_AS(restriction_image_dimensions(2, 4), std::invalid_argument);
}
