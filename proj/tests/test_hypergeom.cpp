#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodlab/algebraicity.hpp"
#include "periodlab/hypergeom.hpp"

#include <random>

using namespace periodlab;

namespace {
const PrecisionCtx ctx = PrecisionCtx::from_digits(50);
const HypergeomParams kMain{Rational(5, 6), Rational(1, 6), Rational(1)};
Real tol(int digits) { return pow(Real(10), -digits); }

Rational small_param(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 11), den(2, 12);
    return Rational(num(rng), den(rng));
}
} // namespace

TEST_CASE("series values against independent evaluations") {
    ScopedPrecision guard(ctx);
    Real v1("1.09843069683986206894293516160869882228393848169225372302703");
    CHECK(abs(f21(kMain, Complex(Rational(1, 2)), ctx) - Complex(v1)) < tol(45));
    Real v2("1.11763555937741958406914859357392850258180996180525374154831");
    HypergeomParams p2{Rational(1, 2), Rational(1, 3), Rational(3, 4)};
    CHECK(abs(f21(p2, Complex(Rational(2, 5)), ctx) - Complex(v2)) < tol(45));
}

TEST_CASE("continuation: outside the disk and across the plane") {
    ScopedPrecision guard(ctx);
    Real v3("0.817858579553735954047051269157513752526571343618968577843488");
    CHECK(abs(f21_continued(kMain, Complex(-3), ctx) - Complex(v3)) < tol(42));
    Complex v4(Real("0.922138293747023531391525480540226044052893631056229526941211"),
               Real("0.325077465940943042429893648753252122860885913469882130128043"));
    CHECK(abs(f21_continued(kMain, Complex(Real(2), Real(1)), ctx) - v4) < tol(42));
    // inside the disk the continued value must agree with the series
    Complex z(Real(1) / 3, Real(1) / 4);
    CHECK(abs(f21_continued(kMain, z, ctx) - f21(kMain, z, ctx)) < tol(42));
}

TEST_CASE("a<->b symmetry, randomized") {
    ScopedPrecision guard(ctx);
    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) {
        HypergeomParams p{small_param(rng), small_param(rng), small_param(rng) + 1};
        Complex z(Rational(std::uniform_int_distribution<int>(1, 8)(rng), 17));
        HypergeomParams swapped{p.b, p.a, p.c};
        CHECK(abs(f21(p, z, ctx) - f21(swapped, z, ctx)) < tol(44));
    }
}

TEST_CASE("contiguity: F(a) - F(a+1) = -(bz/c) F(a+1,b+1,c+1), randomized") {
    ScopedPrecision guard(ctx);
    std::mt19937 rng(6);
    for (int i = 0; i < 10; ++i) {
        HypergeomParams p{small_param(rng), small_param(rng), small_param(rng) + 1};
        Complex z(Rational(std::uniform_int_distribution<int>(1, 9)(rng), 19));
        Complex lhs = f21(p, z, ctx) - f21({p.a + 1, p.b, p.c}, z, ctx);
        Complex rhs = Complex(-to_real(p.b)) * z / Complex(to_real(p.c)) *
                      f21({p.a + 1, p.b + 1, p.c + 1}, z, ctx);
        CHECK(abs(lhs - rhs) < tol(43));
    }
}

TEST_CASE("derivative identity, randomized") {
    ScopedPrecision guard(ctx);
    std::mt19937 rng(7);
    for (int i = 0; i < 10; ++i) {
        HypergeomParams p{small_param(rng), small_param(rng), small_param(rng) + 1};
        Complex z(Rational(std::uniform_int_distribution<int>(1, 9)(rng), 21));
        Complex d = f21_derivative(p, z, ctx);
        Complex contig = Complex(to_real(Rational(p.a * p.b / p.c))) *
                         f21({p.a + 1, p.b + 1, p.c + 1}, z, ctx);
        CHECK(abs(d - contig) < tol(43));
        // central difference as an independent cross-check
        Real h = pow2(-60);
        Complex num = (f21(p, z + Complex(h), ctx) - f21(p, z - Complex(h), ctx)) / Complex(2 * h);
        CHECK(abs(d - num) < pow2(-100));
    }
}

TEST_CASE("gauss summation at one") {
    ScopedPrecision guard(ctx);
    HypergeomParams p{Rational(1, 3), Rational(1, 4), Rational(2)};
    Real oracle("1.06846348090797788418851926919929079072422322857976764674809");
    Complex closed = gauss_value_at_one(p, ctx);
    CHECK(abs(closed - Complex(oracle)) < tol(44));
    CHECK_THROWS_AS(gauss_value_at_one(kMain, ctx), Error);
}

TEST_CASE("gauss equation annihilates the series numerically") {
    ScopedPrecision guard(ctx);
    ScalarODE ode = gauss_equation(kMain);
    REQUIRE(ode.order() == 2);
    Complex z(Rational(1, 3));
    Complex y = f21(kMain, z, ctx);
    Complex y1 = f21_derivative(kMain, z, ctx);
    // y'' from the equation evaluated with an independent finite difference
    Real h = pow2(-55);
    Complex y2 = (f21(kMain, z + Complex(h), ctx) - Complex(2) * y +
                  f21(kMain, z - Complex(h), ctx)) /
                 Complex(h * h);
    Complex resid = ode.coeffs[2].eval(z) * y2 + ode.coeffs[1].eval(z) * y1 +
                    ode.coeffs[0].eval(z) * y;
    CHECK(abs(resid) < pow2(-80));
}

TEST_CASE("schwarz map at 1/2") {
    ScopedPrecision guard(ctx);
    Complex d = schwarz_map(kMain, Complex(Rational(1, 2)), ctx);
    // -exp(-5 pi i/6) = cos(pi/6) + i sin(pi/6)
    Complex expect(Real(sqrt(Real(3)) / 2), Real(1) / 2);
    CHECK(abs(d - expect) < tol(40));
}

TEST_CASE("closed-form monodromy satisfies the product identity") {
    ScopedPrecision guard(ctx);
    auto tri = monodromy_closed_form(kMain, ctx);
    CHECK(cmat_max_diff(tri.Ainf, cmat_mul(tri.A0, tri.A1)) < tol(44));
    auto tri2 = monodromy_closed_form({Rational(1, 2), Rational(1, 3), Rational(3, 4)}, ctx);
    CHECK(cmat_max_diff(tri2.Ainf, cmat_mul(tri2.A0, tri2.A1)) < tol(44));
}

TEST_CASE("determinant relation and its constant") {
    ScopedPrecision guard(ctx);
    for (const auto& p : {HypergeomParams{Rational(1, 2), Rational(1, 3), Rational(3, 4)}, kMain}) {
        auto rep = det_relation_check(p, {Rational(1, 5), Rational(1, 2), Rational(7, 10)}, ctx);
        CHECK(rep.max_deviation < tol(38));
        auto sim = sim_test(rep.constant, rep.reference, 4, BigInt(1000), ctx);
        CHECK(sim.verdict == AlgebraicityVerdict::AlgebraicFound);
        REQUIRE(sim.polynomial);
        CHECK(sim.polynomial->degree <= 4);
    }
}

TEST_CASE("pochhammer factor") {
    ScopedPrecision guard(ctx);
    // alpha = 1/2 gives factor (1 - (-1)) = 2 in the first slot
    Complex f = pochhammer_factor(Rational(1, 2), Rational(1, 2), ctx);
    CHECK(abs(f - Complex(4)) < tol(44));
    CHECK_THROWS_AS(pochhammer_factor(Rational(1), Rational(1, 3), ctx), Error);
}
