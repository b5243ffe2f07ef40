// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include "periodlab/catalog.hpp"
#include "periodlab/curvefam.hpp"
#include "periodlab/pipeline.hpp"
#include "periodlab/quadrature.hpp"

#include <chrono>
#include <iostream>
#include <random>

using namespace periodlab;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what) {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what
              << std::endl;
    if (!ok) ++failures;
}

Real tol(int digits) { return pow(Real(10), -digits); }

const HypergeomParams kMain{Rational(5, 6), Rational(1, 6), Rational(1)};

// ---- 1: cyclic-vector reproduction ----------------------------------------

void criterion1() {
    const auto& fam = catalog_get("cubic5-x1-x2");
    FirstOrderSystem sys;
    sys.var = "t";
    sys.A = *fam.matrix;
    auto unit_seed = [&](size_t i) {
        RFVector u(4);
        u[i] = RationalFunction(1);
        return u;
    };
    auto row_seed = [&](size_t i) {
        RFVector u(4);
        for (size_t j = 0; j < 4; ++j) u[j] = (*fam.matrix)(i, j);
        return u;
    };
    // frame omega = (omega12, omega2, omega1, omega0)
    ScalarODE d0 = system_to_scalar(sys, row_seed(3), 4);
    ScalarODE d12 = system_to_scalar(sys, row_seed(0), 4);
    ScalarODE quot = system_to_scalar(sys, unit_seed(2), 4);
    bool ok = d0.str() == "(-16*t + 27*t^3)*y'' + (-16 + 81*t^2)*y' + (15*t)*y = 0";
    ok = ok && d12.str() == "(-16*t + 27*t^3)*y'' + (-16 + 81*t^2)*y' + (-21*t)*y = 0";
    ok = ok && d0 == fam.ode("nabla-omega0") && d12 == fam.ode("nabla-omega12");
    ok = ok && quot.order() == 3 && quot == fam.ode("omega1");
    ok = ok && system_to_scalar(sys, unit_seed(1), 4) == fam.ode("omega2");
    line(1, ok, "cyclic-vector second- and third-order equations, exact strings");
}

// ---- 2: pullback chain -----------------------------------------------------

void criterion2() {
    const auto& fam = catalog_get("cubic5-x1-x2");
    FirstOrderSystem pulled = pullback(
        gauss_system(kMain),
        Poly(std::vector<Rational>{Rational(0), Rational(0), Rational(27, 16)}), "t");
    RatFuncMatrix G(2, 2);
    G(0, 0) = RationalFunction(1);
    G(1, 1) = RationalFunction(Poly(std::vector<Rational>{Rational(0), Rational(-3)}));
    FirstOrderSystem gauged = gauge_transform(companion_system(fam.ode("nabla-omega0"), "t"), G);
    line(2, pulled.A == gauged.A, "pullback z = 27/16 t^2 + gauge diag(1,-3t), exact");
}

// ---- 3: monodromy ----------------------------------------------------------

CMatrix solve2(const CMatrix& P, const CMatrix& A) { return cmat_mul(cmat_inverse(P), A); }

void criterion3() {
    PrecisionCtx ctx = PrecisionCtx::from_digits(50);
    ScopedPrecision guard(ctx);
    Real eps = tol(38);
    FirstOrderSystem sys = gauss_system(kMain);
    Complex base(Rational(1, 2));
    CMatrix Y = period_matrix_closed_form(kMain, base, ctx).entries;
    auto tri = monodromy_closed_form(kMain, ctx);
    auto m0 = loop_monodromy(sys, base, Complex(0), ctx, Y);
    auto m1 = loop_monodromy(sys, base, Complex(1), ctx, Y);
    bool ok = cmat_max_diff(m0.matrix, tri.A0) < eps && cmat_max_diff(m1.matrix, tri.A1) < eps;

    // conjugate to the integer unipotent pair
    CMatrix I{{Complex(1), Complex(0)}, {Complex(0), Complex(1)}};
    CMatrix N0{{tri.A0[0][0] - Complex(1), tri.A0[0][1]},
               {tri.A0[1][0], tri.A0[1][1] - Complex(1)}};
    CMatrix N1{{tri.A1[0][0] - Complex(1), tri.A1[0][1]},
               {tri.A1[1][0], tri.A1[1][1] - Complex(1)}};
    CMatrix M = cmat_mul(N0, N1);
    // kernel vector of M + I
    Complex p1a, p1b;
    if (abs(M[0][1]) + abs(M[0][0] + Complex(1)) > abs(M[1][0]) + abs(M[1][1] + Complex(1))) {
        p1a = -M[0][1];
        p1b = M[0][0] + Complex(1);
    } else {
        p1a = M[1][1] + Complex(1);
        p1b = -M[1][0];
    }
    Complex p2a = N1[0][0] * p1a + N1[0][1] * p1b;
    Complex p2b = N1[1][0] * p1a + N1[1][1] * p1b;
    CMatrix P{{p1a, p2a}, {p1b, p2b}};
    CMatrix A0c = solve2(P, cmat_mul(tri.A0, P));
    CMatrix A1c = solve2(P, cmat_mul(tri.A1, P));
    CMatrix T0{{Complex(1), Complex(-1)}, {Complex(0), Complex(1)}};
    CMatrix T1{{Complex(1), Complex(0)}, {Complex(1), Complex(1)}};
    ok = ok && cmat_max_diff(A0c, T0) < eps && cmat_max_diff(A1c, T1) < eps;
    CMatrix prod = cmat_mul(tri.A0, tri.A1);
    CMatrix pw = I;
    for (int i = 0; i < 6; ++i) pw = cmat_mul(pw, prod);
    ok = ok && cmat_max_diff(pw, I) < eps;
    line(3, ok, "numeric loop monodromy = closed forms; conjugate pair [[1,-1],[0,1]], "
                "[[1,0],[1,1]]; (A0 A1)^6 = 1");
}

// ---- 4: Schwarz special value ---------------------------------------------

void criterion4() {
    PrecisionCtx ctx = PrecisionCtx::from_digits(50);
    ScopedPrecision guard(ctx);
    Complex d = schwarz_map(kMain, Complex(Rational(1, 2)), ctx);
    Complex expect(sqrt(Real(3)) / 2, Real(1) / 2); // -e^{-5 pi i/6}
    bool ok = abs(d - expect) < tol(40);
    auto mp = minimal_polynomial(d, 8, BigInt(100), ctx);
    ok = ok && mp && mp->str() == "x^4 - x^2 + 1";
    line(4, ok, "D(1/2) = -exp(-5 pi i/6) with minimal polynomial x^4 - x^2 + 1");
}

// ---- 5: determinant relation ----------------------------------------------

void criterion5() {
    PrecisionCtx ctx = PrecisionCtx::from_digits(50);
    ScopedPrecision guard(ctx);
    bool ok = true;
    for (const auto& p :
         {HypergeomParams{Rational(1, 2), Rational(1, 3), Rational(3, 4)}, kMain}) {
        auto rep = det_relation_check(p, {Rational(1, 5), Rational(1, 2), Rational(7, 10)}, ctx);
        ok = ok && rep.max_deviation < tol(38);
        auto sim = sim_test(rep.constant, rep.reference, 4, BigInt(10000), ctx);
        ok = ok && sim.verdict == AlgebraicityVerdict::AlgebraicFound && sim.polynomial &&
             sim.polynomial->degree <= 4;
    }
    line(5, ok, "normalized determinant constant; constant ~ pi B(a,c-a)/B(b,c-b), deg <= 4");
}

// ---- 6: genus fixtures ------------------------------------------------------

void criterion6() {
    bool ok = superelliptic_genus(6, {1, 1, 5}) == 5 && superelliptic_genus(3, {1, 1, 2}) == 2 &&
              superelliptic_genus(2, {1, 1, 1}) == 1;
    line(6, ok, "superelliptic genus 5 / 2 / 1 for (6;1,1,5), (3;1,1,2), (2;1,1,1)");
}

// ---- 7: exact identity fixtures --------------------------------------------

void criterion7() {
    bool ok = true;
    MapEvaluator m(mapspec_get("sextic-quotient"), Rational(1, 3), Rational(1, 5));
    RadicalValue y1sq = m.eval("y1^2");
    ok = ok && y1sq.is_scalar() && y1sq.scalar() == Cyclo12(Rational(3481, 2025));
    MapEvaluator e1(mapspec_get("E1"), Rational(1, 3), Rational(2));
    RadicalValue lhs = e1.eval("yt^2");
    RadicalValue rhs = e1.eval("xt^3-3*xt+2-4*z");
    ok = ok && lhs.is_scalar() && lhs.scalar() == Cyclo12(Rational(12419, 192));
    ok = ok && rhs.is_scalar() && rhs.scalar() == Cyclo12(Rational(12419, 192));
    // E4/E5 as printed must fail, and stay failing (their stanzas expect it)
    for (const char* name : {"E4", "E5"}) {
        auto rep = verify_map(name, Rational(1, 3), {Rational(2), Rational(5, 3)});
        ok = ok && rep.ok;
        for (const auto& chk : rep.checks) ok = ok && !chk.expect_zero && !chk.zero;
    }
    line(7, ok, "exact fixtures y1^2 = 3481/2025, E1 sides 12419/192; E4/E5 regression-locked "
                "failures");
}

// ---- 8: period-matrix bridge ----------------------------------------------

void criterion8() {
    PrecisionCtx ctx = PrecisionCtx::from_digits(50);
    Real dev = period_matrix_compare(Complex(Rational(1, 3)), ctx);
    line(8, dev < tol(30), "quadrature vs closed-form period matrix at z = 1/3, deviation " +
                               Real(dev).str(3));
}

// ---- 9: cm detection --------------------------------------------------------

void criterion9() {
    PrecisionCtx big = PrecisionCtx::from_digits(200);
    ScopedPrecision guard(big);
    auto cm = cm_detect(curve_from_z(Rational(1, 2)), BigInt(1000000), big);
    Complex i(Real(0), Real(1));
    bool ok = cm.is_cm && cm.discriminant == -4 && abs(cm.tau - i) < tol(40);

    PrecisionCtx mid = PrecisionCtx::from_digits(120);
    ScopedPrecision guard2(mid);
    // z(z-1) = -1/125, j = 54000
    Real s5 = sqrt(Real(5));
    Complex z0((1 - 11 * s5 / 25) / 2);
    auto cm12 = cm_detect(curve_from_z(z0), BigInt(1000000), mid);
    // tau ~ sqrt(-3): discriminant -12 class
    ok = ok && cm12.is_cm && cm12.discriminant == -12;
    ok = ok && abs(cm12.tau - Complex(Real(0), sqrt(Real(3)))) < tol(40);

    auto [curve, z15] = curve_from_t(Rational(1, 5));
    auto none = cm_detect(curve, BigInt(1000000), mid);
    ok = ok && !none.is_cm;
    line(9, ok, "z = 1/2 -> tau = i, disc -4; j = 54000 -> disc -12; t = 1/5 -> no relation");
}

// ---- 10: gamma quotients at the class-2 point ------------------------------

void criterion10() {
    PrecisionCtx ctx = PrecisionCtx::from_digits(300);
    ScopedPrecision guard(ctx);
    Real s5 = sqrt(Real(5));
    Complex z0((1 - 11 * s5 / 25) / 2);
    Complex f_z = f21_continued(kMain, z0, ctx);
    Complex f_1mz = f21_continued(kMain, Complex(1) - z0, ctx);
    auto g1 = gamma_quotient_test(f_z, ctx);
    auto g2 = gamma_quotient_test(f_1mz, ctx);
    bool ok = g1.verdict == AlgebraicityVerdict::AlgebraicFound && g1.polynomial &&
              g2.verdict == AlgebraicityVerdict::AlgebraicFound && g2.polynomial;

    // dual-precision confirmation: residuals of the found polynomials at 600
    if (ok) {
        PrecisionCtx hi = ctx.doubled();
        ScopedPrecision guard2(hi);
        Real s5h = sqrt(Real(5));
        Complex z0h((1 - 11 * s5h / 25) / 2);
        Real ref = gamma_third_cubed_over_pi2(hi);
        auto confirm = [&](const Complex& zz, const MinimalPolynomialCandidate& mp) {
            Complex q = f21_continued(kMain, zz, hi) / Complex(ref);
            Complex acc(0), pw(1);
            for (const auto& c : mp.coefficients) {
                acc += Complex(Real(c)) * pw;
                pw = pw * q;
            }
            return abs(acc) < tol(500);
        };
        ok = confirm(z0h, *g1.polynomial) && confirm(Complex(1) - z0h, *g2.polynomial);
    }

    // control at j = 1728, i.e. z = 1/2
    auto ctrl = gamma_quotient_test(f21(kMain, Complex(Rational(1, 2)), ctx), ctx);
    ok = ok && ctrl.verdict == AlgebraicityVerdict::NoRelationAtBounds;
    std::string polys = ok ? " (" + g1.polynomial->str() + "; " + g2.polynomial->str() + ")" : "";
    line(10, ok, "F/Gamma quotients at z(z-1) = -1/125 algebraic at 300 digits, confirmed at "
                 "600; j = 1728 control clean" + polys);
}

// ---- 11: catalog consistency ------------------------------------------------

void criterion11() {
    PrecisionCtx ctx = PrecisionCtx::from_digits(40);
    ScopedPrecision guard(ctx);
    bool ok = true;
    for (const auto& name : catalog_names()) {
        auto rep = singular_locus_consistency(name, ctx);
        ok = ok && rep.ok;
    }
    auto r3 = singular_locus_consistency("cubic5-x1sq-x1x2", ctx);
    ok = ok && r3.leftovers.size() == 1 && r3.leftovers[0].verdict == SingularityKind::Apparent &&
         abs(r3.leftovers[0].point - Complex(Rational(2, 27))) < tol(25);
    auto r5 = singular_locus_consistency("cubic5-x1-x1x2", ctx);
    Poly marker(std::vector<Rational>{Rational(325), Rational(54), Rational(729)});
    ok = ok && r5.leftovers.size() == 2;
    for (const auto& cand : r5.leftovers)
        ok = ok && cand.verdict == SingularityKind::Apparent &&
             abs(marker.eval(cand.point)) < tol(20);
    line(11, ok, "locus consistency for all six families; apparent points at 2/27 and the "
                 "roots of 729t^2+54t+325");
}

// ---- 12: elliptic bridge ----------------------------------------------------

void criterion12() {
    PrecisionCtx ctx = PrecisionCtx::from_digits(50);
    auto rep = lemmagamma_bridge({Rational(1, 5), Rational(3, 10), Rational(2, 5)}, ctx);
    line(12, rep.max_deviation < tol(30),
         "elliptic periods through the hypergeometric equation, deviation " +
             Real(rep.max_deviation).str(3));
}

// ---- 13: randomized property suites -----------------------------------------

void criterion13() {
    PrecisionCtx ctx = PrecisionCtx::from_digits(50);
    ScopedPrecision guard(ctx);
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> num(1, 11), den(2, 12), zn(1, 9);
    auto rat = [&] { return Rational(num(rng), den(rng)); };
    bool ok = true;

    for (int i = 0; i < 10; ++i) {
        // gamma recurrence and reflection
        Rational x = rat();
        Real g1x = gamma_rat(Rational(x + 1), ctx);
        ok = ok && abs(Complex(Real(g1x - to_real(x) * gamma_rat(x, ctx)) / g1x)) < tol(44);
        if (!is_integer(x))
            ok = ok && abs(Complex(Real(gamma_rat(x, ctx) * gamma_rat(Rational(1 - x), ctx) -
                                        const_pi() / sin(to_real(x) * const_pi())))) < tol(40);

        HypergeomParams p{rat(), rat(), Rational(rat() + 1)};
        Complex z(Rational(zn(rng), 19));
        // a <-> b symmetry
        ok = ok && abs(f21(p, z, ctx) - f21({p.b, p.a, p.c}, z, ctx)) < tol(44);
        // contiguity
        HypergeomParams up{Rational(p.a + 1), Rational(p.b + 1), Rational(p.c + 1)};
        Complex lhs = f21(p, z, ctx) - f21({Rational(p.a + 1), p.b, p.c}, z, ctx);
        Complex rhs = Complex(-to_real(p.b)) * z / Complex(to_real(p.c)) * f21(up, z, ctx);
        ok = ok && abs(lhs - rhs) < tol(43);
        // derivative = (ab/c) contiguous value
        ok = ok && abs(f21_derivative(p, z, ctx) -
                       Complex(to_real(Rational(p.a * p.b / p.c))) * f21(up, z, ctx)) < tol(43);
    }

    // Pochhammer commutator = (1 - e^{2 pi i a})(1 - e^{2 pi i m}) * segment
    for (int i = 0; i < 10; ++i) {
        Rational a(num(rng), 12), m(num(rng), 12);
        if (is_integer(a) || is_integer(m)) continue;
        std::vector<SegmentFactor> f{{Complex(0), Rational(a - 1)}, {Complex(1), Rational(m - 1)}};
        Complex loop = pochhammer_commutator_integral(Complex(0), Complex(1), f, ctx);
        Complex seg = segment_power_integral(Complex(0), Complex(1), f, ctx);
        ok = ok && abs(loop - pochhammer_factor(Rational(a - 1), Rational(m - 1), ctx) * seg) <
                       tol(40);
    }

    // path independence of continuation
    FirstOrderSystem sys = companion_system(gauss_equation(kMain), "z");
    Complex z0(Rational(1, 10));
    std::vector<Complex> init{f21(kMain, z0, ctx), f21_derivative(kMain, z0, ctx)};
    for (int i = 0; i < 10; ++i) {
        Complex zt(Rational(zn(rng), 20), Rational(zn(rng), 10));
        Complex mid1(Rational(zn(rng), 30), Rational(zn(rng), 7));
        Complex mid2(Rational(zn(rng), 40), Rational(zn(rng) + 9, 8));
        auto v1 = continue_solution(sys, init, CPath{{z0, mid1, zt}}, ctx);
        auto v2 = continue_solution(sys, init, CPath{{z0, mid2, zt}}, ctx);
        ok = ok && abs(v1[0] - v2[0]) + abs(v1[1] - v2[1]) < tol(40);
    }
    line(13, ok, "gamma, symmetry, contiguity, derivative, Pochhammer and continuation "
                 "properties over seeded random draws");
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    auto t1 = std::chrono::steady_clock::now();
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failing") << " ("
              << std::chrono::duration_cast<std::chrono::seconds>(t1 - t0).count() << " s)"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
