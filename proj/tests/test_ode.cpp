#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodlab/hypergeom.hpp"

#include <random>

using namespace periodlab;

namespace {
const PrecisionCtx ctx = PrecisionCtx::from_digits(50);
const HypergeomParams kMain{Rational(5, 6), Rational(1, 6), Rational(1)};
Real tol(int digits) { return pow(Real(10), -digits); }
} // namespace

TEST_CASE("companion system round-trips through the cyclic vector") {
    ScalarODE ode = gauss_equation(kMain).primitive();
    FirstOrderSystem sys = companion_system(ode, "z");
    CHECK(sys.dim() == 2);
    ScalarODE back = system_to_scalar(sys, 0, 2);
    CHECK(back == ode);
}

TEST_CASE("singular locus of the gauss system") {
    ScopedPrecision guard(ctx);
    FirstOrderSystem sys = gauss_system(kMain);
    auto pts = sys.singular_points(ctx);
    REQUIRE(pts.size() == 2);
    Real d0 = min(abs(pts[0]), abs(pts[1]));
    Real d1 = min(abs(pts[0] - Complex(1)), abs(pts[1] - Complex(1)));
    CHECK(d0 < tol(40));
    CHECK(d1 < tol(40));
}

TEST_CASE("continuation reproduces the series") {
    ScopedPrecision guard(ctx);
    FirstOrderSystem sys = companion_system(gauss_equation(kMain), "z");
    Complex z0(Rational(1, 10)), z1(Rational(2, 5));
    std::vector<Complex> init{f21(kMain, z0, ctx), f21_derivative(kMain, z0, ctx)};
    auto out = continue_solution(sys, init, CPath::segment(z0, z1), ctx);
    CHECK(abs(out[0] - f21(kMain, z1, ctx)) < tol(42));
    CHECK(abs(out[1] - f21_derivative(kMain, z1, ctx)) < tol(42));
}

TEST_CASE("continuation is path independent, randomized") {
    ScopedPrecision guard(ctx);
    FirstOrderSystem sys = companion_system(gauss_equation(kMain), "z");
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> num(1, 9);
    Complex z0(Rational(1, 10));
    std::vector<Complex> init{f21(kMain, z0, ctx), f21_derivative(kMain, z0, ctx)};
    for (int i = 0; i < 10; ++i) {
        Complex zt(Rational(num(rng), 20), Rational(num(rng), 10));
        Complex mid1(Rational(num(rng), 30), Rational(num(rng), 7));
        Complex mid2(Rational(num(rng), 40), Rational(num(rng) + 9, 8));
        auto via1 = continue_solution(sys, init, CPath{{z0, mid1, zt}}, ctx);
        auto via2 = continue_solution(sys, init, CPath{{z0, mid2, zt}}, ctx);
        CHECK(abs(via1[0] - via2[0]) < tol(40));
        CHECK(abs(via1[1] - via2[1]) < tol(40));
    }
}

TEST_CASE("gauge and pullback compose to the catalog equation") {
    // hypergeometric system, z = 27/16 t^2, gauge diag(1, -3t)
    FirstOrderSystem hg = gauss_system(kMain);
    FirstOrderSystem pulled =
        pullback(hg, Poly(std::vector<Rational>{Rational(0), Rational(0), Rational(27, 16)}), "t");
    ScalarODE target{std::vector<Poly>{
        Poly(std::vector<Rational>{Rational(0), Rational(15)}),
        Poly(std::vector<Rational>{Rational(-16), Rational(0), Rational(81)}),
        Poly(std::vector<Rational>{Rational(0), Rational(-16), Rational(0), Rational(27)})}};
    FirstOrderSystem comp = companion_system(target, "t");
    RatFuncMatrix G(2, 2);
    G(0, 0) = RationalFunction(1);
    G(1, 1) = RationalFunction(Poly(std::vector<Rational>{Rational(0), Rational(-3)}));
    FirstOrderSystem gauged = gauge_transform(comp, G);
    CHECK(pulled.A == gauged.A);
}

TEST_CASE("loop monodromy around a regular point is the identity") {
    ScopedPrecision guard(ctx);
    FirstOrderSystem sys = companion_system(gauss_equation(kMain), "z");
    auto mono = loop_monodromy(sys, Complex(Rational(1, 4), Rational(1, 2)),
                               Complex(Rational(1, 4), Rational(3, 4)), ctx);
    CMatrix id{{Complex(1), Complex(0)}, {Complex(0), Complex(1)}};
    CHECK(cmat_max_diff(mono.matrix, id) < tol(40));
}

TEST_CASE("numeric monodromy conjugacy invariants at 0") {
    ScopedPrecision guard(ctx);
    FirstOrderSystem sys = companion_system(gauss_equation(kMain), "z");
    auto mono = loop_monodromy(sys, Complex(Rational(1, 2)), Complex(0), ctx);
    // c = 1: unipotent with a single Jordan block
    Complex tr = mono.matrix[0][0] + mono.matrix[1][1];
    CHECK(abs(tr - Complex(2)) < tol(40));
    CHECK(abs(cmat_det(mono.matrix) - Complex(1)) < tol(40));
    CHECK(cmat_max_diff(mono.matrix, {{Complex(1), Complex(0)}, {Complex(0), Complex(1)}}) >
          Real(1) / 100);
}

TEST_CASE("indicial exponents of the gauss equation") {
    ScopedPrecision guard(ctx);
    HypergeomParams p{Rational(1, 2), Rational(1, 3), Rational(3, 4)};
    auto e0 = indicial_exponents(gauss_equation(p), Complex(0), ctx);
    REQUIRE(e0.size() == 2);
    // {0, 1-c}
    Real best = min(abs(e0[0]), abs(e0[1]));
    CHECK(best < tol(40));
    Real other = max(abs(e0[0].re), abs(e0[1].re));
    CHECK(abs(Complex(other) - Complex(Rational(1, 4))) < tol(40));
    auto e1 = indicial_exponents(gauss_equation(p), Complex(1), ctx);
    // {0, c-a-b}
    std::sort(e1.begin(), e1.end(), [](const Complex& x, const Complex& y) { return x.re < y.re; });
    CHECK(abs(e1[0] - Complex(Rational(-1, 12))) < tol(40));
    CHECK(abs(e1[1]) < tol(40));
}

TEST_CASE("apparent singularity detection") {
    ScopedPrecision guard(ctx);
    // (t-1/2) y'' - 2 y' = 0 has solutions 1, (t-1/2)^3: apparent at 1/2
    ScalarODE ode{std::vector<Poly>{
        Poly(0), Poly(-2), Poly(std::vector<Rational>{Rational(-1, 2), Rational(1)})}};
    CHECK(apparent_singularity_test(ode, Complex(Rational(1, 2)), ctx) ==
          SingularityKind::Apparent);
    CHECK(apparent_singularity_test(gauss_equation(kMain), Complex(0), ctx) ==
          SingularityKind::TrueSingularity);
}

TEST_CASE("path parsing") {
    ScopedPrecision guard(ctx);
    CPath p = parse_path("0.1,0;0.5,0.5;1.5,0", ctx);
    REQUIRE(p.vertices.size() == 3);
    CHECK(abs(p.vertices[1] - Complex(Real(1) / 2, Real(1) / 2)) < tol(30));
}
