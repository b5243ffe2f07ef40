#include "periodlab/elliptic.hpp"

#include "periodlab/algebraicity.hpp"
#include "periodlab/quadrature.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace periodlab {

namespace {

Real tiny_for(const PrecisionCtx& ctx) { return pow2(-static_cast<long>(ctx.bits) / 2); }

void check_nonsingular(const EllipticCurveModel& c, const PrecisionCtx& ctx) {
    if (c.kind == CurveKind::ShortWeierstrass) {
        if (c.p_rat && c.q_rat) {
            Rational disc = 4 * (*c.p_rat) * (*c.p_rat) * (*c.p_rat) +
                            27 * (*c.q_rat) * (*c.q_rat);
            if (disc == 0) throw Error("SingularCurve", "4p^3 + 27q^2 = 0");
            return;
        }
        Complex disc = Complex(4) * c.p * c.p * c.p + Complex(27) * c.q * c.q;
        if (abs(disc) < tiny_for(ctx)) throw Error("SingularCurve", "4p^3 + 27q^2 ~ 0");
    } else {
        // x^4 + u x^2 + 1 is square-free iff u != +-2
        if (abs(c.u - Complex(2)) < tiny_for(ctx) || abs(c.u + Complex(2)) < tiny_for(ctx))
            throw Error("SingularCurve", "quartic has a repeated root");
    }
}

} // namespace

EllipticCurveModel curve_cubic(const Rational& p, const Rational& q) {
    if (4 * p * p * p + 27 * q * q == 0)
        throw Error("SingularCurve", "4p^3 + 27q^2 = 0");
    EllipticCurveModel c;
    c.kind = CurveKind::ShortWeierstrass;
    c.p = Complex(p);
    c.q = Complex(q);
    c.p_rat = p;
    c.q_rat = q;
    return c;
}

EllipticCurveModel curve_cubic(const Complex& p, const Complex& q) {
    EllipticCurveModel c;
    c.kind = CurveKind::ShortWeierstrass;
    c.p = p;
    c.q = q;
    return c;
}

EllipticCurveModel curve_quartic(const Rational& u) {
    EllipticCurveModel c;
    c.kind = CurveKind::Quartic;
    c.u = Complex(u);
    c.u_rat = u;
    return c;
}

std::pair<EllipticCurveModel, Rational> curve_from_t(const Rational& t) {
    Rational t2 = t * t;
    if (t2 == 0 || t2 == Rational(16, 27))
        throw Error("SingularFiber", "t^2 in {0, 16/27}");
    Rational z = Rational(27, 16) * t2;
    return {curve_cubic(Rational(-3), 2 - Rational(27, 4) * t2), z};
}

EllipticCurveModel curve_from_z(const Rational& z) {
    if (z == 0 || z == 1) throw Error("SingularFiber", "z in {0, 1}");
    return curve_cubic(Rational(-3), 2 - 4 * z);
}

EllipticCurveModel curve_from_z(const Complex& z) {
    return curve_cubic(Complex(-3), Complex(2) - Complex(4) * z);
}

Complex j_invariant(const EllipticCurveModel& c, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    check_nonsingular(c, ctx);
    if (c.kind == CurveKind::ShortWeierstrass) {
        Complex p3 = Complex(4) * c.p * c.p * c.p;
        return Complex(1728) * p3 / (p3 + Complex(27) * c.q * c.q);
    }
    // binary-quartic invariants of x^4 + u x^2 + 1
    Complex I = c.u * c.u + Complex(12);
    Complex J = Complex(2) * c.u * c.u * c.u - Complex(72) * c.u;
    Complex I3 = Complex(4) * I * I * I;
    return Complex(1728) * I3 / (I3 - J * J);
}

namespace {

std::vector<Complex> curve_branch_points(const EllipticCurveModel& c, const PrecisionCtx& ctx) {
    std::vector<Complex> coeffs;
    if (c.kind == CurveKind::ShortWeierstrass)
        coeffs = {c.q, c.p, Complex(0), Complex(1)};
    else
        coeffs = {Complex(1), Complex(0), c.u, Complex(0), Complex(1)};
    auto roots = aberth_roots(coeffs, ctx);
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return roots;
}

Complex half_period(const std::vector<Complex>& roots, size_t i, size_t j,
                    const PrecisionCtx& ctx) {
    std::vector<SegmentFactor> f;
    for (const auto& r : roots) f.push_back({r, Rational(-1, 2)});
    return segment_power_integral(roots[i], roots[j], f, ctx);
}

} // namespace

PeriodLattice periods(const EllipticCurveModel& c, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    check_nonsingular(c, ctx);
    auto roots = curve_branch_points(c, ctx);
    PeriodLattice lat;
    lat.omega1 = Complex(2) * half_period(roots, 0, 1, ctx);
    lat.omega2 = Complex(2) * half_period(roots, 1, 2, ctx);
    if (lat.omega1.re < 0 && abs(Complex(lat.omega1.im)) < tiny_for(ctx) * abs(lat.omega1)) {
        lat.omega1 = -lat.omega1;
        lat.omega2 = -lat.omega2;
    }
    Complex tau = lat.omega1 / lat.omega2;
    if (abs(Complex(tau.im)) < tiny_for(ctx))
        throw Error("DegenerateLattice", "period ratio is real");
    if (tau.im < 0) {
        lat.omega2 = -lat.omega2;
        tau = -tau;
    }
    lat.tau = tau;
    return lat;
}

PeriodLattice periods_agm(const EllipticCurveModel& c, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    check_nonsingular(c, ctx);
    if (c.kind != CurveKind::Quartic && c.kind != CurveKind::ShortWeierstrass)
        throw Error("BadDomain", "unknown curve kind");
    if (c.kind != CurveKind::ShortWeierstrass)
        throw Error("BadDomain", "AGM path implemented for the cubic model only");
    auto roots = curve_branch_points(c, ctx);
    Real tol = pow2(-static_cast<long>(ctx.bits));
    for (const auto& r : roots)
        if (abs(Complex(r.im)) > tol * (1 + abs(r)))
            throw Error("BadDomain", "AGM path needs three real roots");
    // roots sorted ascending: e3 < e2 < e1
    Real e3 = roots[0].re, e2 = roots[1].re, e1 = roots[2].re;
    auto agm = [&](Real a, Real b) {
        while (abs(Complex(a - b)) > tol * abs(Complex(a))) {
            Real m = (a + b) / 2;
            b = sqrt(a * b);
            a = m;
        }
        return a;
    };
    Real pi = const_pi();
    PeriodLattice lat;
    // real period over [e3, e2], imaginary period over [e2, e1]
    lat.omega1 = Complex(2 * pi / agm(sqrt(e1 - e3), sqrt(e1 - e2)));
    lat.omega2 = Complex(Real(0), 2 * pi / agm(sqrt(e1 - e3), sqrt(e2 - e3)));
    Complex tau = lat.omega1 / lat.omega2;
    if (tau.im < 0) {
        lat.omega2 = -lat.omega2;
        tau = -tau;
    }
    lat.tau = tau;
    return lat;
}

TauReduction tau_reduce(const Complex& tau) {
    if (!(tau.im > 0)) throw Error("BadDomain", "need Im tau > 0");
    TauReduction out;
    Complex t = tau;
    long a = 1, b = 0, cc = 0, d = 1;
    std::ostringstream word;
    Real eps("1e-30");
    for (int iter = 0; iter < 256; ++iter) {
        Real nr;
        mpfr_round(nr.backend().data(), t.re.backend().data());
        long n = static_cast<long>(nr);
        if (n != 0) {
            t.re -= n;
            // compose (1, -n; 0, 1)
            a -= n * cc;
            b -= n * d;
            if (word.tellp() > 0) word << " ";
            word << "T^" << -n;
        }
        if (norm(t) < 1 - eps) {
            t = -inv(t);
            long na = -cc, nb = -d;
            cc = a;
            d = b;
            a = na;
            b = nb;
            if (word.tellp() > 0) word << " ";
            word << "S";
        } else if (n == 0) {
            break;
        }
    }
    if (t.re > Real(1) / 2 + eps || t.re < -Real(1) / 2 - eps)
        throw Error("IterationDivergence", "fundamental-domain reduction did not settle");
    // deterministic edges: Re = +1/2 snaps to -1/2, and on |tau| = 1 take
    // Re <= 0, so reductions at different precisions agree on the boundary
    if (t.re > Real(1) / 2 - eps) {
        t.re -= 1;
        a -= cc;
        b -= d;
        if (word.tellp() > 0) word << " ";
        word << "T^-1";
    }
    if (abs(Complex(norm(t) - 1)) < eps && t.re > eps) {
        t = -inv(t);
        long na = -cc, nb = -d;
        cc = a;
        d = b;
        a = na;
        b = nb;
        if (word.tellp() > 0) word << " ";
        word << "S";
    }
    out.tau = t;
    out.abcd = {a, b, cc, d};
    out.word = word.str().empty() ? "1" : word.str();
    return out;
}

Complex modular_j(const Complex& tau, const PrecisionCtx& ctx) {
    if (!(tau.im > 0)) throw Error("BadDomain", "need Im tau > 0");
    ScopedPrecision guard(ctx);
    Real pi = const_pi();
    Complex q = exp(Complex(Real(0), 2 * pi) * tau);
    Real aq = abs(q);
    if (aq >= 1) throw Error("BadDomain", "|q| >= 1");
    double lq = -static_cast<double>(log(aq));
    long N = static_cast<long>((ctx.bits + 32) * 0.6931471805599453 / lq) + 2;
    if (N > 200000) throw Error("QuadratureNonconvergence", "q too close to the unit circle");
    // E4 = 1 + 240 sum sigma3(n) q^n
    Complex e4(1);
    Complex qn(1);
    for (long n = 1; n <= N; ++n) {
        qn *= q;
        BigInt s3(0);
        for (long dvs = 1; dvs * dvs <= n; ++dvs) {
            if (n % dvs) continue;
            BigInt d1(dvs), d2(n / dvs);
            s3 += d1 * d1 * d1;
            if (d2 != d1) s3 += d2 * d2 * d2;
        }
        e4 += Complex(Real(240) * Real(s3)) * qn;
    }
    // Delta = q prod (1-q^n)^24
    Complex delta = q;
    qn = Complex(1);
    for (long n = 1; n <= N; ++n) {
        qn *= q;
        delta *= pow_int(Complex(1) - qn, 24);
    }
    return e4 * e4 * e4 / delta;
}

CMDecision cm_detect(const EllipticCurveModel& curve, const BigInt& max_coeff,
                     const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    PeriodLattice lat = periods(curve, ctx);
    TauReduction red = tau_reduce(lat.tau);
    CMDecision out;
    out.tau = red.tau;
    out.verified_at_bits = static_cast<long>(ctx.bits);
    auto rel = integer_relation(
        std::vector<Complex>{red.tau * red.tau, red.tau, Complex(1)}, max_coeff, ctx);
    if (!rel || rel->coefficients[0] == 0) {
        out.is_cm = false;
        out.residual = Real(0);
        return out;
    }
    BigInt A = rel->coefficients[0], B = rel->coefficients[1], C = rel->coefficients[2];
    BigInt disc = B * B - 4 * A * C;
    if (disc >= 0) {
        out.is_cm = false;
        out.residual = rel->residual;
        return out;
    }
    // re-verify at doubled precision
    PrecisionCtx ctx2 = ctx.doubled();
    ScopedPrecision guard2(ctx2);
    PeriodLattice lat2 = periods(curve, ctx2);
    TauReduction red2 = tau_reduce(lat2.tau);
    Complex resid = Complex(Real(A)) * red2.tau * red2.tau + Complex(Real(B)) * red2.tau +
                    Complex(Real(C));
    Real r2 = abs(resid);
    if (r2 >= pow2(-static_cast<long>(ctx.bits)))
        throw Error("Inconclusive", "relation found at " + std::to_string(ctx.bits) +
                                        " bits but refuted at doubled precision");
    out.is_cm = true;
    out.A = A;
    out.B = B;
    out.C = C;
    out.discriminant = disc;
    out.residual = r2;
    out.verified_at_bits = static_cast<long>(ctx2.bits);
    out.tau = red2.tau;
    return out;
}

std::vector<std::array<long, 3>> reduced_forms(long D) {
    if (D >= 0) throw Error("BadDomain", "need a negative discriminant");
    long m = ((D % 4) + 4) % 4;
    if (m != 0 && m != 1) throw Error("BadDomain", "D must be 0 or 1 mod 4");
    std::vector<std::array<long, 3>> forms;
    for (long a = 1; 3 * a * a <= -D; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if (((b - D) % 2 + 2) % 2 != 0) continue;
            long num = b * b - D;
            if (num % (4 * a)) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue;
            long g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
            if (g != 1) continue;
            forms.push_back({a, b, c});
        }
    }
    return forms;
}

std::pair<std::vector<BigInt>, Real> hilbert_class_polynomial(long D, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    auto forms = reduced_forms(D);
    if (forms.empty()) throw Error("BadDomain", "no reduced forms");
    Real sD = sqrt(Real(-D));
    std::vector<Complex> poly{Complex(1)};
    for (const auto& f : forms) {
        Complex tau(Real(-f[1]) / (2 * f[0]), sD / (2 * f[0]));
        Complex j = modular_j(tau, ctx);
        std::vector<Complex> next(poly.size() + 1, Complex(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * j;
        }
        poly = next;
    }
    std::vector<BigInt> out;
    Real dev(0);
    for (const auto& cf : poly) {
        BigInt r;
        mpfr_get_z(r.backend().data(), cf.re.backend().data(), MPFR_RNDN);
        Real d1 = abs(Complex(cf.re - Real(r)));
        if (d1 > dev) dev = d1;
        Real d2 = abs(Complex(cf.im));
        if (d2 > dev) dev = d2;
        out.push_back(r);
    }
    return {out, dev};
}

} // namespace periodlab
