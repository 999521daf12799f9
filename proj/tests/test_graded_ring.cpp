#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihrep/graded_poly.hpp"

#include <random>
#include <thread>

using namespace ihrep;

namespace {

const GradedPoly a = GradedPoly::alpha();
const GradedPoly b = GradedPoly::beta();
const GradedPoly g = GradedPoly::gamma();

Rational evaluate(const GradedPoly& p, const Rational& x, const Rational& y, const Rational& z) {
    Rational total;
    for (const auto& [m, c] : p.terms())
        total += c * power(x, m.alpha) * power(y, m.beta) * power(z, m.gamma);
    return total;
}

GradedPoly random_poly(std::mt19937_64& rng, int terms) {
    std::uniform_int_distribution<std::uint32_t> e(0, 3);
    std::uniform_int_distribution<std::int64_t> c(-9, 9);
    GradedPoly p;
    for (int t = 0; t < terms; ++t)
        p.add_term({e(rng), e(rng), e(rng)}, Rational(c(rng), 3));
    return p;
}

}  // namespace

TEST_CASE("ring operations") {
    CHECK(a * a == GradedPoly::monomial({2, 0, 0}));
    CHECK((a + b) * (a - b) == a * a - b * b);
    const GradedPoly square = poly_mul(xi(), xi());
    const GradedPoly expected = GradedPoly::monomial({2, 2, 0}) + GradedPoly::monomial({1, 1, 1}, Rational(4)) +
                                GradedPoly::monomial({0, 0, 2}, Rational(4));
    CHECK(square == expected);
    CHECK(poly_scale(Rational(0), a).is_zero());
    CHECK((a - a).terms().empty());
    CHECK(GradedPoly().degree() == GradedPoly::kZeroDegree);
}

TEST_CASE("distributivity on random triples") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_poly(rng, 4), q = random_poly(rng, 4), r = random_poly(rng, 4);
        CHECK(poly_mul(p, poly_add(q, r)) == poly_add(poly_mul(p, q), poly_mul(p, r)));
        CHECK(poly_mul(p, q) == poly_mul(q, p));
        const GradedPoly product = poly_mul(p, q);
        for (const auto& [m, c] : product.terms())
            CHECK(!c.is_zero());
    }
}

TEST_CASE("monomial order") {
    using M = Monomial3;
    // Graded: lower weighted degree first.
    CHECK(MonomialOrder::compare(M{0, 0, 1}, M{4, 0, 0}) < 0);
    // Same degree 6: alpha^3 > alpha*beta > gamma.
    CHECK(MonomialOrder::compare(M{3, 0, 0}, M{1, 1, 0}) > 0);
    CHECK(MonomialOrder::compare(M{1, 1, 0}, M{0, 0, 1}) > 0);
    CHECK(MonomialOrder::compare(M{}, M{0, 0, 1}) < 0);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint32_t> e(0, 5);
    for (int trial = 0; trial < 500; ++trial) {
        const M u{e(rng), e(rng), e(rng)}, v{e(rng), e(rng), e(rng)}, w{e(rng), e(rng), e(rng)};
        CHECK(MonomialOrder::compare(u, v) == MonomialOrder::compare(u * w, v * w));
        CHECK(MonomialOrder::compare(M{}, u) <= 0);
    }
}

TEST_CASE("mumford_c values") {
    CHECK(mumford_c(0) == GradedPoly(Rational(1)));
    CHECK(mumford_c(1) == a);
    CHECK(mumford_c(2) == Rational(1, 2) * a * a);
    CHECK(mumford_c(3) == Rational(1, 6) * pow(a, 3) + Rational(1, 3) * a * b + Rational(2, 3) * g);
    CHECK(mumford_c(4) == Rational(1, 24) * pow(a, 4) + Rational(1, 3) * a * a * b + Rational(2, 3) * a * g);
    CHECK(mumford_c(3).to_string() == "1/6*alpha^3 + 1/3*alpha*beta + 2/3*gamma");
}

TEST_CASE("mumford_c is homogeneous and satisfies the recursion") {
    for (unsigned n = 0; n <= 30; ++n) {
        const GradedPoly c = mumford_c(n);
        CHECK(c.is_homogeneous());
        CHECK(c.degree() == 2 * static_cast<std::int64_t>(n));
    }
    for (unsigned n = 3; n <= 30; ++n) {
        const GradedPoly residual = Rational(n) * mumford_c(n) - a * mumford_c(n - 1) -
                                    Rational(static_cast<std::int64_t>(n) - 2) * b * mumford_c(n - 2) -
                                    Rational(2) * g * mumford_c(n - 3);
        CHECK(residual.is_zero());
    }
}

TEST_CASE("mumford_c agrees with the recursion evaluated at points") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> v(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational x(v(rng), 2), y(v(rng), 3), z(v(rng));
        std::vector<Rational> c{Rational(1), x, x * x / Rational(2)};
        for (std::int64_t n = 3; n <= 15; ++n)
            c.push_back((x * c[n - 1] + Rational(n - 2) * y * c[n - 2] + Rational(2) * z * c[n - 3]) / Rational(n));
        for (unsigned n = 0; n <= 15; ++n)
            CHECK(evaluate(mumford_c(n), x, y, z) == c[n]);
    }
}

TEST_CASE("mumford_c memo is consistent under concurrent callers") {
    std::vector<std::string> rendered(8);
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < rendered.size(); ++t)
        threads.emplace_back([&, t] { rendered[t] = mumford_c(24 + t % 3).to_string(); });
    for (auto& th : threads)
        th.join();
    for (unsigned t = 0; t < rendered.size(); ++t)
        CHECK(rendered[t] == mumford_c(24 + t % 3).to_string());
}

TEST_CASE("xi") {
    CHECK(xi() == a * b + Rational(2) * g);
    CHECK(xi().degree() == 6);
    CHECK(xi() - a * b == Rational(2) * g);
}

TEST_CASE("expand_abxi_monomial") {
    CHECK(expand_abxi_monomial(0, 0, 0) == GradedPoly(Rational(1)));
    CHECK(expand_abxi_monomial(0, 0, 1) == xi());
    CHECK(expand_abxi_monomial(1, 1, 1) ==
          GradedPoly::monomial({2, 2, 0}) + GradedPoly::monomial({1, 1, 1}, Rational(2)));
    for (unsigned i = 0; i <= 3; ++i)
        for (unsigned j = 0; j <= 3; ++j)
            for (unsigned k = 0; k <= 6; ++k) {
                const auto p = expand_abxi_monomial(i, j, k);
                CHECK(p.term_count() == k + 1);
                CHECK(p.is_homogeneous());
                CHECK(p.degree() == 2 * i + 4 * j + 6 * k);
            }
}

TEST_CASE("text rendering round-trips") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_poly(rng, 5);
        CHECK(GradedPoly::parse(p.to_string()) == p);
    }
    CHECK(GradedPoly::parse("0").is_zero());
    CHECK(GradedPoly::parse("-alpha^2 + 3") == GradedPoly(Rational(3)) - a * a);
    CHECK(xi().to_string(TextStyle::latex) == "\\alpha\\beta + 2\\gamma");
    CHECK_THROWS_AS(GradedPoly::parse("alpha + delta"), std::invalid_argument);
    CHECK_THROWS_AS(GradedPoly::parse("alpha +"), std::invalid_argument);
    CHECK_THROWS_AS(GradedPoly::parse("alpha^x"), std::invalid_argument);
}
