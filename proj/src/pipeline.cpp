#include "periodlab/pipeline.hpp"

#include "periodlab/quadrature.hpp"

#include <algorithm>
#include <sstream>

namespace periodlab {

Codimension codimension_decision(bool is_cm, bool schwarz_in_field) {
    if (!is_cm) return Codimension::Two;
    if (schwarz_in_field) return Codimension::One;
    return Codimension::UndeterminedByTheorem;
}

namespace {

const HypergeomParams kParams{Rational(5, 6), Rational(1, 6), Rational(1)};

AlgebraicityReport inconclusive_report(const std::string& why, const PrecisionCtx& ctx) {
    AlgebraicityReport r;
    r.verdict = AlgebraicityVerdict::Inconclusive;
    r.precision_bits = static_cast<long>(ctx.bits);
    r.note = why;
    return r;
}

} // namespace

HodgeReport theorem1_from_z_value(const Complex& z, const std::string& input_desc,
                                  const PrecisionCtx& ctx, const Theorem1Bounds& bounds) {
    ScopedPrecision guard(ctx);
    Real tiny = pow2(-static_cast<long>(ctx.bits) / 2);
    if (abs(z) < tiny || abs(z - Complex(1)) < tiny)
        throw Error("SingularFiber", "z in {0, 1}");
    HodgeReport rep;
    rep.input_desc = input_desc;
    rep.z = z;
    rep.precision_bits = static_cast<long>(ctx.bits);

    rep.cm = cm_detect(curve_from_z(z), bounds.cm_height, ctx);

    if (rep.cm.is_cm) {
        Complex D = schwarz_map(kParams, z, ctx);
        rep.schwarz_value = D;
        try {
            auto mp = minimal_polynomial(D, bounds.schwarz_deg, bounds.schwarz_height, ctx);
            AlgebraicityReport ar;
            ar.max_deg = bounds.schwarz_deg;
            ar.max_height = bounds.schwarz_height;
            ar.precision_bits = static_cast<long>(ctx.bits);
            if (mp) {
                ar.verdict = AlgebraicityVerdict::AlgebraicFound;
                ar.polynomial = *mp;
                ar.note = "satisfies " + mp->str();
            } else {
                ar.verdict = AlgebraicityVerdict::NoRelationAtBounds;
                ar.note = "no minimal polynomial at the stated bounds";
            }
            rep.schwarz_alg = ar;
        } catch (const Error& e) {
            if (e.code() != "PrecisionTooLow") throw;
            rep.schwarz_alg = inconclusive_report(e.what(), ctx);
        }
        try {
            auto c3 = in_cyclotomic3(D, bounds.field_height, ctx);
            if (c3) {
                rep.zeta3_coords = *c3;
                rep.in_qzeta3 = true;
            }
        } catch (const Error& e) {
            if (e.code() != "PrecisionTooLow") throw;
        }
        try {
            rep.gamma_at_z = gamma_quotient_test(f21_continued(kParams, z, ctx), ctx);
        } catch (const Error& e) {
            if (e.code() != "PrecisionTooLow") throw;
            rep.gamma_at_z = inconclusive_report(e.what(), ctx);
        }
        try {
            rep.gamma_at_1mz = gamma_quotient_test(f21_continued(kParams, Complex(1) - z, ctx), ctx);
        } catch (const Error& e) {
            if (e.code() != "PrecisionTooLow") throw;
            rep.gamma_at_1mz = inconclusive_report(e.what(), ctx);
        }
    }
    rep.codimension = codimension_decision(rep.cm.is_cm, rep.in_qzeta3);
    return rep;
}

HodgeReport theorem1_from_t(const Rational& t, const PrecisionCtx& ctx,
                            const Theorem1Bounds& bounds) {
    auto [curve, z] = curve_from_t(t);
    (void)curve;
    auto rep = theorem1_from_z_value(Complex(z), "t = " + t.str(), ctx, bounds);
    rep.z_exact = z;
    return rep;
}

HodgeReport theorem1_from_z(const Rational& z, const PrecisionCtx& ctx,
                            const Theorem1Bounds& bounds) {
    if (z == 0 || z == 1) throw Error("SingularFiber", "z in {0, 1}");
    auto rep = theorem1_from_z_value(Complex(z), "z = " + z.str(), ctx, bounds);
    rep.z_exact = z;
    return rep;
}

HodgeReport theorem1_from_j(const Rational& j, const PrecisionCtx& ctx,
                            const Theorem1Bounds& bounds) {
    if (j == 0) throw Error("BadDomain", "no fiber of this family has j = 0");
    ScopedPrecision guard(ctx);
    // z^2 - z + 432/j = 0
    Rational disc_rat = 1 - Rational(1728) / j;
    Real disc = to_real(disc_rat);
    std::string desc = "j = " + j.str();
    if (disc >= 0) {
        Real s = sqrt(disc);
        Real r1 = (1 - s) / 2, r2 = (1 + s) / 2;
        Real pick;
        if (r1 > 0 && r1 < 1)
            pick = r1;
        else if (r2 > 0 && r2 < 1)
            pick = r2;
        else
            pick = abs(Complex(r1)) <= abs(Complex(r2)) ? r1 : r2;
        return theorem1_from_z_value(Complex(pick), desc, ctx, bounds);
    }
    Complex zc(Real(1) / 2, sqrt(-disc) / 2);
    return theorem1_from_z_value(zc, desc, ctx, bounds);
}

namespace {

// u f + v g = 1 for coprime f, g
std::pair<Poly, Poly> bezout_pair(const Poly& f, const Poly& g) {
    Poly r0 = f, r1 = g;
    Poly s0(1), s1(0), t0(0), t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw Error("BadInput", "polynomials are not coprime");
    Rational inv = 1 / r0[0];
    return {s0 * inv, t0 * inv};
}

} // namespace

std::pair<Real, Real> elliptic_period_pair(const Rational& z, const PrecisionCtx& ctx) {
    if (!(z > 0 && z < 1)) throw Error("BadDomain", "need z in (0, 1)");
    ScopedPrecision guard(ctx);
    Poly f(std::vector<Rational>{2 - 4 * z, Rational(-3), Rational(0), Rational(1)});
    auto roots = poly_roots_numeric(f, ctx);
    std::sort(roots.begin(), roots.end(),
              [](const Complex& a, const Complex& b) { return a.re < b.re; });
    Real e3 = roots[0].re, e2 = roots[1].re, e1 = roots[2].re;
    auto [u, v] = bezout_pair(f, f.derivative());
    // d(1/y)/dz = 2/y^3, and cycle-wise 1/y^3 integrates like (u + 2v')/y
    Poly g = u + v.derivative() * Rational(2);
    auto inv_y = [&](const Real& x, const Real& dlo, const Real& dhi) {
        return Complex(Real(1) / sqrt((e1 - x) * dhi * dlo));
    };
    auto g_over_y = [&](const Real& x, const Real& dlo, const Real& dhi) {
        return Complex(g.eval(x) / sqrt((e1 - x) * dhi * dlo));
    };
    Real omega = 2 * tanh_sinh(inv_y, e3, e2, ctx).re;
    Real omega_prime = 4 * tanh_sinh(g_over_y, e3, e2, ctx).re;
    return {omega, omega_prime};
}

BridgeReport lemmagamma_bridge(std::vector<Rational> z_samples, const PrecisionCtx& ctx) {
    if (z_samples.size() < 2) throw Error("BadInput", "need at least two samples");
    for (const auto& z : z_samples)
        if (!(z >= Rational(1, 20) && z <= Rational(19, 20)))
            throw Error("BadDomain", "samples must stay 0.05 away from 0 and 1");
    std::sort(z_samples.begin(), z_samples.end());
    ScopedPrecision guard(ctx);
    BridgeReport rep;
    rep.samples = z_samples;
    rep.max_deviation = Real(0);
    auto sys = companion_system(gauss_equation(kParams), "z");
    auto [om, omp] = elliptic_period_pair(z_samples[0], ctx);
    std::vector<Complex> state{Complex(om), Complex(omp)};
    for (size_t i = 1; i < z_samples.size(); ++i) {
        state = continue_solution(
            sys, state, CPath::segment(Complex(z_samples[i - 1]), Complex(z_samples[i])), ctx);
        auto [omd, ompd] = elliptic_period_pair(z_samples[i], ctx);
        Real dev = abs(state[0] - Complex(omd)) + abs(state[1] - Complex(ompd));
        rep.deviations.push_back(dev);
        if (dev > rep.max_deviation) rep.max_deviation = dev;
        state = {Complex(omd), Complex(ompd)};
    }
    return rep;
}

PeriodGammaReport period_gamma_check(const Complex& z0, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    PeriodGammaReport rep;
    rep.cm = cm_detect(curve_from_z(z0), BigInt(1000000), ctx);
    if (!rep.cm.is_cm) throw Error("BadDomain", "not a CM point");
    rep.schwarz_value = schwarz_map(kParams, z0, ctx);
    auto c3 = in_cyclotomic3(rep.schwarz_value, BigInt(1000000), ctx);
    if (!c3)
        throw Error("BadDomain", "Schwarz value not recognized in Q(zeta3); "
                                 "the period statement does not apply");
    rep.schwarz_coords = *c3;
    auto lat = periods(curve_from_z(z0), ctx);
    rep.omega1 = lat.omega1;
    rep.omega2 = lat.omega2;
    Real ref = gamma_third_cubed_over_pi2(ctx) * const_pi();
    rep.omega1_test = sim_test(rep.omega1, Complex(ref), 12, BigInt(1) << 30, ctx);
    rep.omega2_test = sim_test(rep.omega2, Complex(ref), 12, BigInt(1) << 30, ctx);
    return rep;
}

} // namespace periodlab
