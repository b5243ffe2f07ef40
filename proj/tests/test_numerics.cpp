#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodlab/numerics.hpp"

#include <random>

using namespace periodlab;

namespace {
const PrecisionCtx ctx = PrecisionCtx::from_digits(50);
Real tol(int digits) { return pow(Real(10), -digits); }
} // namespace

TEST_CASE("rational parsing") {
    ScopedPrecision guard(ctx);
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-16") == Rational(-16));
    CHECK(parse_rational("27/-9") == Rational(-3));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("gamma fixed values") {
    ScopedPrecision guard(ctx);
    Real g13("2.67893853470774763365569294097467764412868937795730110095043");
    Real g16("5.56631600178023520425009689520772611139879911487285346161675");
    CHECK(abs(Complex(gamma_rat(Rational(1, 3), ctx) - g13)) < tol(45));
    CHECK(abs(Complex(gamma_rat(Rational(1, 6), ctx) - g16)) < tol(45));
    CHECK(abs(Complex(gamma_real(Real(1) / 2, ctx) - sqrt(const_pi()))) < tol(45));
    CHECK_THROWS_AS(gamma_rat(Rational(-2), ctx), Error);
}

TEST_CASE("gamma recurrence and reflection, randomized") {
    ScopedPrecision guard(ctx);
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> num(1, 40), den(2, 12);
    for (int i = 0; i < 12; ++i) {
        Rational x(num(rng), den(rng));
        Real lhs = gamma_rat(x + 1, ctx);
        Real rhs = Real(to_real(x) * gamma_rat(x, ctx));
        CHECK(abs(Complex(lhs - rhs)) / abs(Complex(lhs)) < tol(45));
        if (!is_integer(x)) {
            Real refl = Real(gamma_rat(x, ctx) * gamma_rat(1 - x, ctx));
            Real target = Real(const_pi() / sin(Real(to_real(x) * const_pi())));
            CHECK(abs(Complex(refl - target)) / abs(Complex(target)) < tol(44));
        }
    }
}

TEST_CASE("complex gamma agrees with the real one and with recurrence") {
    ScopedPrecision guard(ctx);
    CHECK(abs(gamma(Complex(Rational(1, 3)), ctx) - Complex(gamma_rat(Rational(1, 3), ctx))) <
          tol(44));
    Complex z(Real(1) / 3, Real(3) / 5);
    CHECK(abs(gamma(z + Complex(1), ctx) - z * gamma(z, ctx)) < tol(44));
}

TEST_CASE("beta") {
    ScopedPrecision guard(ctx);
    Real b("2.2405026006665604393104126416685704691750759710411320137451");
    CHECK(abs(Complex(beta(Rational(5, 6), Rational(1, 2), ctx) - b)) < tol(45));
    CHECK(abs(Complex(beta(Rational(2), Rational(3), ctx) - Real(Real(1) / 12))) < tol(45));
}

TEST_CASE("principal powers and roots of unity") {
    ScopedPrecision guard(ctx);
    Complex i(Real(0), Real(1));
    CHECK(abs(pow_principal(i, Rational(2), ctx) + Complex(1)) < tol(45));
    // (-1)^(1/2) with principal log is +i
    CHECK(abs(pow_principal(Complex(-1), Rational(1, 2), ctx) - i) < tol(45));
    Complex z6 = root_of_unity(6, 1, ctx);
    Complex acc(1);
    for (int k = 0; k < 6; ++k) acc = acc * z6;
    CHECK(abs(acc - Complex(1)) < tol(44));
    CHECK(abs(root_of_unity(4, 1, ctx) - i) < tol(45));
}

TEST_CASE("agreement digits") {
    ScopedPrecision guard(ctx);
    Complex a(Real("1.234567890123456789"));
    Complex b(Real("1.234567890999999999"));
    long d = agreement_digits(a, b);
    CHECK(d >= 8);
    CHECK(d <= 11);
    CHECK(agreement_digits(a, a) > 40);
}
