#include "periodlab/numerics.hpp"

namespace periodlab {

Rational parse_rational(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) {
        // allow decimal-free integers only
        return Rational(BigInt(s));
    }
    BigInt num(s.substr(0, pos));
    BigInt den(s.substr(pos + 1));
    if (den == 0) throw Error("BadRational", "zero denominator in '" + s + "'");
    return Rational(num, den);
}

Real gamma_real(const Real& x, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    if (x <= 0 && floor(x) == x)
        throw Error("PoleAtNonpositiveInteger", "gamma pole");
    Real r;
    mpfr_gamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

Real gamma_rat(const Rational& x, const PrecisionCtx& ctx) {
    if (is_nonpositive_integer(x))
        throw Error("PoleAtNonpositiveInteger", "gamma pole");
    ScopedPrecision guard(ctx);
    return gamma_real(to_real(x), ctx);
}

// Spouge's approximation, valid for Re z > 0. Relative error about
// a^{-1/2} (2 pi)^{-(a+1/2)}, so a ~ 0.39 * bits suffices.
static Complex gamma_spouge(const Complex& z, const PrecisionCtx& ctx) {
    long a = static_cast<long>(0.40 * ctx.bits) + 8;
    // the series cancels ~ a*log10(e) digits; work with guard precision
    ScopedPrecision guard(PrecisionCtx(ctx.bits + static_cast<unsigned>(1.45 * a) + 32));
    Real pi = const_pi();
    Complex zm1 = z - Complex(1);
    Complex acc(sqrt(2 * pi));
    Real ck_scale(1); // (-1)^{k-1}/(k-1)!
    for (long k = 1; k < a; ++k) {
        if (k > 1) ck_scale /= -(k - 1);
        Real ak(a - k);
        Real ck = ck_scale * pow(ak, Real(k) - Real(1) / 2) * exp(ak);
        acc += Complex(ck) / (zm1 + Complex(Real(k)));
    }
    Complex za = zm1 + Complex(Real(a));
    Complex p = exp((zm1 + Complex(Real(1) / 2)) * log(za) - za);
    return p * acc;
}

Complex gamma(const Complex& x, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    if (x.im == 0) {
        if (x.re <= 0 && floor(x.re) == x.re)
            throw Error("PoleAtNonpositiveInteger", "gamma pole");
        return Complex(gamma_real(x.re, ctx));
    }
    if (x.re < Real(1) / 2) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        Real pi = const_pi();
        Complex pz = Complex(pi) * x;
        Complex s{sin(pz.re) * cosh(pz.im), cos(pz.re) * sinh(pz.im)};
        return Complex(pi) / (s * gamma_spouge(Complex(1) - x, ctx));
    }
    return gamma_spouge(x, ctx);
}

Real beta(const Rational& a, const Rational& b, const PrecisionCtx& ctx) {
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b) || is_nonpositive_integer(a + b))
        throw Error("PoleAtNonpositiveInteger", "beta pole");
    ScopedPrecision guard(ctx);
    return gamma_rat(a, ctx) * gamma_rat(b, ctx) / gamma_rat(a + b, ctx);
}

Complex pow_principal(const Complex& base, const Rational& e, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    if (base.re == 0 && base.im == 0) {
        if (e <= 0) throw Error("ZeroBase", "0 to nonpositive power");
        return Complex(0);
    }
    if (is_integer(e) && abs(numerator(e)) < 1024)
        return pow_int(base, static_cast<long>(numerator(e)));
    return exp(Complex(to_real(e)) * log(base));
}

Complex pow_principal(const Complex& base, const Complex& e, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    if (base.re == 0 && base.im == 0) {
        if (e.im != 0 || e.re <= 0) throw Error("ZeroBase", "0 to nonpositive power");
        return Complex(0);
    }
    return exp(e * log(base));
}

Complex root_of_unity(long d, long k, const PrecisionCtx& ctx) {
    if (d < 1) throw Error("BadOrder", "root_of_unity needs d >= 1");
    ScopedPrecision guard(ctx);
    long r = ((k % d) + d) % d;
    if (r == 0) return Complex(1);
    if (2 * r == d) return Complex(-1);
    Real theta = 2 * const_pi() * r / d;
    return cis(theta);
}

long agreement_digits(const Complex& x, const Complex& y) {
    Real d = abs(x - y);
    Real s = abs(x);
    if (d == 0) return 1000000;
    if (s == 0) s = 1;
    Real rel = d / s;
    return static_cast<long>(-log10(rel));
}

} // namespace periodlab
