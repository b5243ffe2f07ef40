#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodlab/poly.hpp"
#include "periodlab/ratfunc.hpp"

#include <random>

using namespace periodlab;

namespace {
const PrecisionCtx ctx = PrecisionCtx::from_digits(50);

Poly random_poly(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-9, 9), den(1, 4);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& q : c) q = Rational(coef(rng), den(rng));
    return Poly(c);
}
} // namespace

TEST_CASE("polynomial division invariant, randomized") {
    std::mt19937 rng(2);
    for (int i = 0; i < 20; ++i) {
        Poly a = random_poly(rng, 6), b = random_poly(rng, 3);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.degree() < b.degree()));
    }
}

TEST_CASE("gcd divides both arguments") {
    std::mt19937 rng(3);
    for (int i = 0; i < 10; ++i) {
        Poly g = random_poly(rng, 2), a = random_poly(rng, 3), b = random_poly(rng, 3);
        if (g.is_zero()) continue;
        Poly d = gcd(g * a, g * b);
        auto [q1, r1] = divmod(g * a, d);
        auto [q2, r2] = divmod(g * b, d);
        CHECK(r1.is_zero());
        CHECK(r2.is_zero());
        if (!a.is_zero() && !b.is_zero()) CHECK(d.degree() >= g.degree() - gcd(a, b).degree());
    }
}

TEST_CASE("primitive form and content") {
    Poly p(std::vector<Rational>{Rational(-4, 6), Rational(8, 6), Rational(-2)});
    Poly prim = p.primitive();
    CHECK(prim == Poly(std::vector<Rational>{Rational(1), Rational(-2), Rational(3)}));
    CHECK(p.content() == Rational(2, 3));
}

TEST_CASE("squarefree decomposition") {
    Poly x = Poly::variable();
    Poly p = (x - Poly(1)) * (x - Poly(1)) * (x + Poly(2));
    auto dec = squarefree_decomposition(p);
    Poly rebuilt(1);
    for (const auto& [f, m] : dec)
        for (int i = 0; i < m; ++i) rebuilt = rebuilt * f;
    CHECK(rebuilt.monic() == p.monic());
    bool has_square = false;
    for (const auto& [f, m] : dec)
        if (m == 2 && f.monic() == (x - Poly(1)).monic()) has_square = true;
    CHECK(has_square);
}

TEST_CASE("parse/str round trip") {
    Poly p = Poly::parse("-16*t + 27*t^3");
    CHECK(p == Poly(std::vector<Rational>{Rational(0), Rational(-16), Rational(0), Rational(27)}));
    CHECK(Poly::parse(p.str()) == p);
}

TEST_CASE("numeric roots") {
    ScopedPrecision guard(ctx);
    Poly p(std::vector<Rational>{Rational(0), Rational(-16), Rational(0), Rational(27)});
    auto roots = poly_roots_numeric(p, ctx);
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots) CHECK(abs(p.eval(r)) < pow(Real(10), -40));
}

TEST_CASE("rational function arithmetic and normalization") {
    Poly x = Poly::variable();
    RationalFunction f(x * x - Poly(1), x - Poly(1)); // reduces to x + 1
    CHECK(f == RationalFunction(x + Poly(1)));
    RationalFunction g = f - RationalFunction(x);
    CHECK(g == RationalFunction(1));
    RationalFunction h = RationalFunction(Poly(1)) / RationalFunction(x);
    CHECK(h * RationalFunction(x) == RationalFunction(1));
}

TEST_CASE("matrix inverse over Q(t), randomized") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 5; ++trial) {
        RatFuncMatrix m(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) m(i, j) = RationalFunction(random_poly(rng, 1));
        RatFuncMatrix inv;
        try {
            inv = m.inverse();
        } catch (const Error&) {
            continue; // singular draw
        }
        RatFuncMatrix prod = m * inv;
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j)
                CHECK(prod(i, j) == RationalFunction(i == j ? 1 : 0));
    }
}
