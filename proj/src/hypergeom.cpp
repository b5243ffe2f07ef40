#include "periodlab/hypergeom.hpp"

namespace periodlab {

Complex f21(const HypergeomParams& p, const Complex& z, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    if (is_nonpositive_integer(p.c)) throw Error("CPole", "c is a nonpositive integer");
    Real az = abs(z);
    bool terminating =
        is_nonpositive_integer(p.a) || is_nonpositive_integer(p.b);
    if (!terminating && az >= 1 - Real(1) / 4096)
        throw Error("OutOfDisk", "series restricted to |z| < 1 - 1/4096; use continuation");
    Complex term(1), sum(1);
    Real a = to_real(p.a), b = to_real(p.b), c = to_real(p.c);
    Real tol = pow2(-static_cast<long>(ctx.bits) - 8);
    // geometric tail bound once the term ratio settles under |z|
    Real tail_factor = terminating ? Real(1) : Real(1) / (1 - az);
    long nmax = 50000000;
    for (long n = 0; n < nmax; ++n) {
        Complex ratio = Complex((a + n) * (b + n) / ((c + n) * (n + 1))) * z;
        term *= ratio;
        if (term == Complex(0)) break;
        sum += term;
        if (abs(term) * tail_factor < tol * (abs(sum) + 1)) break;
        if (n == nmax - 1) throw Error("OutOfDisk", "series did not converge");
    }
    return sum;
}

Complex f21_derivative(const HypergeomParams& p, const Complex& z, const PrecisionCtx& ctx) {
    HypergeomParams up{p.a + 1, p.b + 1, p.c + 1};
    Complex f = f21(up, z, ctx);
    return Complex(to_real(p.a * p.b / p.c)) * f;
}

ScalarODE gauss_equation(const HypergeomParams& p) {
    ScalarODE ode;
    ode.coeffs = {
        Poly(-p.a * p.b),
        Poly(std::vector<Rational>{p.c, -(p.a + p.b + 1)}),
        Poly(std::vector<Rational>{Rational(0), Rational(1), Rational(-1)}),
    };
    return ode;
}

FirstOrderSystem gauss_system(const HypergeomParams& p) {
    Poly z = Poly::variable();
    Poly zm1 = z - Poly(1);
    FirstOrderSystem sys;
    sys.var = "z";
    sys.A = RatFuncMatrix(2, 2);
    sys.A(0, 0) = RationalFunction(Poly(p.c - 1), z);
    sys.A(0, 1) = RationalFunction(Poly(-p.b), z);
    sys.A(1, 0) = RationalFunction(Poly(p.a), zm1);
    sys.A(1, 1) = RationalFunction(Poly(p.c - p.a - p.b - 1), zm1);
    return sys;
}

Complex f21_continued(const HypergeomParams& p, const Complex& z, const PrecisionCtx& ctx,
                      bool through_upper_half_plane) {
    Real az = abs(z);
    if (az < Real(3) / 4 && !(z.im == 0 && z.re >= 1)) return f21(p, z, ctx);
    ScopedPrecision guard(ctx);
    auto sys = companion_system(gauss_equation(p), "z");
    Complex base(Real(1) / 10);
    std::vector<Complex> init{f21(p, base, ctx), f21_derivative(p, base, ctx)};
    Real h = through_upper_half_plane ? Real(7) / 10 : Real(-7) / 10;
    CPath path;
    path.vertices = {base, base + Complex(Real(0), h), Complex(z.re, h)};
    if (!(abs(z.im) < abs(h) && ((h > 0) == (z.im > 0)) && z.im != 0))
        path.vertices.push_back(z);
    else
        path.vertices.back() = z;
    auto v = continue_solution(sys, init, path, ctx);
    return v[0];
}

Complex gauss_value_at_one(const HypergeomParams& p, const PrecisionCtx& ctx) {
    if (p.c - p.a - p.b <= 0) throw Error("DivergentAtOne", "requires Re(c-a-b) > 0");
    ScopedPrecision guard(ctx);
    if (p.a == 0 || p.b == 0) return Complex(1);
    Real num = gamma_rat(p.c, ctx) * gamma_rat(p.c - p.a - p.b, ctx);
    Real den = gamma_rat(p.c - p.a, ctx) * gamma_rat(p.c - p.b, ctx);
    return Complex(num / den);
}

Complex pochhammer_factor(const Rational& alpha, const Rational& mu, const PrecisionCtx& ctx) {
    if (is_integer(alpha) || is_integer(mu))
        throw Error("IntegerExponent", "Pochhammer factor degenerates for integer exponents");
    ScopedPrecision guard(ctx);
    Real two_pi = 2 * const_pi();
    Complex f1 = Complex(1) - cis(two_pi * to_real(alpha));
    Complex f2 = Complex(1) - cis(two_pi * to_real(mu));
    return f1 * f2;
}

static Complex exp_pi_i(const Rational& q, const PrecisionCtx&) {
    return cis(const_pi() * to_real(q));
}

static Complex rat_pow(const Complex& base, const Rational& e, const PrecisionCtx& ctx) {
    return pow_principal(base, e, ctx);
}

FundamentalMatrix fundamental_matrix(const HypergeomParams& p, const Complex& z,
                                     const PrecisionCtx& ctx, FMRep rep) {
    ScopedPrecision guard(ctx);
    const Rational &a = p.a, &b = p.b, &c = p.c;
    if ((z.im == 0 && (z.re == 0 || z.re == 1)))
        throw Error("DegenerateParameters", "z must avoid 0 and 1");
    if (is_nonpositive_integer(c)) throw Error("DegenerateParameters", "c nonpositive integer");

    Complex one_m_z = Complex(1) - z;
    Real two_pi = 2 * const_pi();
    Complex C1 = (Complex(1) - cis(two_pi * to_real(a))) *
                 (Complex(1) - cis(two_pi * to_real(c - a - 1)));
    Complex C2 = (Complex(1) - cis(-two_pi * to_real(b))) *
                 (Complex(1) - cis(two_pi * to_real(c - a - 1)));

    FundamentalMatrix out;
    out.params = p;
    out.z = z;
    out.rep = rep;
    out.entries.assign(2, std::vector<Complex>(2, Complex(0)));

    // first (akh) column: valid whenever c is not a nonpositive integer
    Complex D1 = Complex(beta(a, c - a, ctx)) * rat_pow(z, c - 1, ctx);
    out.entries[0][0] = f21(p, z, ctx) * D1 * C1;
    // second-row sign fixed so the columns satisfy Y' = A Y and the
    // contiguity Y2 = -b^{-1} (z Y1' + (1-c) Y1)
    out.entries[1][0] =
        Complex(to_real(-a / c)) * z * f21({a + 1, b + 1, c + 1}, z, ctx) * D1 * C1;

    if (rep == FMRep::akh) {
        if (is_nonpositive_integer(c - a - b) || c == a + b)
            throw Error("DegenerateParameters", "akh column needs c-a-b not in {0,-1,...}");
        Complex D2 = -exp_pi_i(1 + a - c, ctx) * Complex(beta(1 - b, c - a, ctx)) *
                     rat_pow(one_m_z, c - a - b - 1, ctx);
        out.entries[0][1] =
            one_m_z * f21({1 - a, 1 - b, 1 + c - a - b}, one_m_z, ctx) * D2 * C2;
        out.entries[1][1] = Complex(to_real((c - a - b) / b)) *
                            f21({-a, -b, c - a - b}, one_m_z, ctx) * D2 * C2;
    } else {
        // Pochhammer [gamma_0, gamma_1] solution; F arguments live at 1/z and
        // are reached by continuation through the upper half-plane.
        if (a == b) throw Error("DegenerateParameters", "ukh column needs a != b");
        Complex inv_z = Complex(1) / z;
        Complex pref = (Complex(1) - cis(two_pi * to_real(a))) *
                       (Complex(1) - cis(two_pi * to_real(b))) *
                       Complex(beta(a, 1 - b, ctx)) * rat_pow(z, c - a - 1, ctx);
        out.entries[0][1] = pref * f21_continued({a - c + 1, a, a - b + 1}, inv_z, ctx);
        out.entries[1][1] = pref * Complex(to_real(-a / (a - b))) *
                            f21_continued({a - c + 1, a + 1, a - b + 1}, inv_z, ctx);
    }
    return out;
}

// The [gamma_1, gamma_z] column in the c = a+b limit, via the contiguity
// Y2 = -b^{-1} (z Y1' + (1-c) Y1) applied to the still-valid first-row form.
static void degenerate_second_column(const HypergeomParams& p, const Complex& z,
                                     const PrecisionCtx& ctx, CMatrix& Y) {
    const Rational &a = p.a, &b = p.b, &c = p.c;
    Complex one_m_z = Complex(1) - z;
    Real two_pi = 2 * const_pi();
    Complex C2 = (Complex(1) - cis(-two_pi * to_real(b))) *
                 (Complex(1) - cis(two_pi * to_real(c - a - 1)));
    // c-a-b = 0: Y12 = K F(1-a,1-b,1|1-z) with
    Complex K = -cis(const_pi() * to_real(1 + a - c)) * Complex(beta(1 - b, c - a, ctx)) * C2;
    HypergeomParams q{1 - a, 1 - b, 1};
    Complex F = f21(q, one_m_z, ctx);
    Complex Fd = -f21_derivative(q, one_m_z, ctx); // d/dz of F(...|1-z)
    Y[0][1] = K * F;
    Y[1][1] = Complex(to_real(Rational(-1) / b)) * (z * K * Fd + Complex(Rational(1 - c)) * K * F);
}

FundamentalMatrix period_matrix_closed_form(const HypergeomParams& p, const Complex& z,
                                            const PrecisionCtx& ctx) {
    if (!p.degenerate_at_one()) return fundamental_matrix(p, z, ctx, FMRep::akh);
    if (p.c != p.a + p.b)
        throw Error("DegenerateParameters", "only the c = a+b degeneration is supported");
    ScopedPrecision guard(ctx);
    FundamentalMatrix out = fundamental_matrix(p, z, ctx, FMRep::ukh);
    out.rep = FMRep::akh;
    degenerate_second_column(p, z, ctx, out.entries);
    return out;
}

Complex schwarz_map(const HypergeomParams& p, const Complex& z, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    const Rational &a = p.a, &b = p.b, &c = p.c;
    if (is_nonpositive_integer(c - a - b + 1))
        throw Error("DegenerateParameters", "c-a-b+1 must not be a nonpositive integer");
    if (c == 1 && a + b == 1) {
        Complex num = f21(p, z, ctx);
        Complex den = f21({b, a, Rational(1)}, Complex(1) - z, ctx);
        return -exp_pi_i(-a, ctx) * num / den;
    }
    Real two_pi = 2 * const_pi();
    Complex pref = (Complex(1) - cis(two_pi * to_real(a))) /
                   (-exp_pi_i(1 + a - c, ctx) * (Complex(1) - cis(-two_pi * to_real(b))));
    Complex bq = Complex(beta(a, c - a, ctx) / beta(1 - b, c - a, ctx));
    Complex num = rat_pow(z, c - 1, ctx) * f21(p, z, ctx);
    Complex den = f21({1 - a, 1 - b, c - a - b + 1}, Complex(1) - z, ctx);
    return pref * bq * num / den;
}

MonodromyTriple monodromy_closed_form(const HypergeomParams& p, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    Real two_pi = 2 * const_pi();
    auto e = [&](const Rational& q) { return cis(two_pi * to_real(q)); };
    MonodromyTriple m;
    m.A0 = {{e(p.c), e(-p.b) - Complex(1)}, {Complex(0), Complex(1)}};
    // lower-left entry derived from the connection formulas; consistent with
    // A0 and the fundamental-matrix normalization for all parameters
    m.A1 = {{Complex(1), Complex(0)},
            {e(p.c) * (Complex(1) - e(-p.a)), e(p.c - p.a - p.b)}};
    m.Ainf = cmat_mul(m.A0, m.A1);
    return m;
}

DetRelationReport det_relation_check(const HypergeomParams& p,
                                     const std::vector<Rational>& samples,
                                     const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    DetRelationReport rep;
    rep.max_deviation = 0;
    for (const auto& s : samples) {
        if (s <= Rational(1, 20) || s >= Rational(19, 20))
            throw Error("BadSample", "samples must stay in (0.05, 0.95)");
        Complex z{to_real(s)};
        // the degenerate case needs the corrected second column, not raw ukh
        FundamentalMatrix Y = p.degenerate_at_one()
                                  ? period_matrix_closed_form(p, z, ctx)
                                  : fundamental_matrix(p, z, ctx, FMRep::akh);
        Complex det = cmat_det(Y.entries);
        Real zc = pow(to_real(s), to_real(1 - p.c));
        Real zc1 = pow(to_real(1 - s), to_real(1 + p.a + p.b - p.c));
        rep.normalized_values.push_back(Complex(abs(det) * zc * zc1));
    }
    for (size_t i = 0; i < rep.normalized_values.size(); ++i)
        for (size_t j = i + 1; j < rep.normalized_values.size(); ++j) {
            Real d = abs(rep.normalized_values[i] - rep.normalized_values[j]);
            if (d > rep.max_deviation) rep.max_deviation = d;
        }
    rep.constant = rep.normalized_values.empty() ? Complex(0) : rep.normalized_values[0];
    rep.reference =
        Complex(const_pi() * beta(p.a, p.c - p.a, ctx) / beta(p.b, p.c - p.b, ctx));
    rep.ratio = rep.constant / rep.reference;
    return rep;
}

} // namespace periodlab
