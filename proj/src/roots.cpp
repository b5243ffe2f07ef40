#include "periodlab/poly.hpp"

namespace periodlab {

static Complex horner(const std::vector<Complex>& c, const Complex& x) {
    Complex r(0);
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    size_t n = coeffs.size() - 1;
    std::vector<Complex> dcoeffs(n);
    for (size_t i = 1; i <= n; ++i) dcoeffs[i - 1] = coeffs[i] * Complex(Real(static_cast<long>(i)));

    // Cauchy-style radius
    Real lcabs = abs(coeffs[n]);
    Real radius(0);
    for (size_t i = 0; i < n; ++i) {
        Real r = abs(coeffs[i]) / lcabs;
        if (r > radius) radius = r;
    }
    radius += 1;

    std::vector<Complex> x(n);
    Real two_pi = 2 * const_pi();
    for (size_t i = 0; i < n; ++i) {
        Real theta = two_pi * (Real(static_cast<long>(i)) + Real(37) / 100) / static_cast<long>(n);
        x[i] = Complex(radius * Real(7) / 10) * cis(theta);
    }

    Real target = pow2(-static_cast<long>(ctx.bits));
    long max_iter = 200 + 4 * static_cast<long>(ctx.bits);
    for (long it = 0; it < max_iter; ++it) {
        Real worst(0);
        for (size_t i = 0; i < n; ++i) {
            Complex p = horner(coeffs, x[i]);
            Complex dp = horner(dcoeffs, x[i]);
            if (abs(dp) == 0) {
                x[i] += Complex(target); // nudge off a critical point
                continue;
            }
            Complex newton = p / dp;
            Complex s(0);
            for (size_t j = 0; j < n; ++j)
                if (j != i) s += inv(x[i] - x[j]);
            Complex corr = newton / (Complex(1) - newton * s);
            x[i] -= corr;
            Real step = abs(corr);
            if (step > worst) worst = step;
        }
        if (worst < target * radius) break;
    }
    return x;
}

std::vector<Complex> poly_roots_numeric(const Poly& p, const PrecisionCtx& ctx) {
    if (p.is_zero()) throw Error("ZeroPolynomial", "roots of the zero polynomial");
    ScopedPrecision guard(ctx);
    std::vector<Complex> out;
    Real pnorm(0);
    for (const auto& q : p.coeffs()) {
        Real a = abs(to_real(q));
        if (a > pnorm) pnorm = a;
    }
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        std::vector<Complex> c(factor.degree() + 1);
        for (long i = 0; i <= factor.degree(); ++i) c[i] = Complex(to_real(factor.coeff(i)));
        auto roots = aberth_roots(c, ctx);
        Real tol = pow2(-static_cast<long>(ctx.bits / 2)) * pnorm;
        for (auto& r : roots) {
            if (abs(p.eval(r)) >= tol)
                throw Error("IterationDivergence", "root residual target unmet");
            if (abs(r.im) < pow2(-static_cast<long>(ctx.bits) + 16) * (1 + abs(r.re))) r.im = 0;
            for (int m = 0; m < mult; ++m) out.push_back(r);
        }
    }
    return out;
}

} // namespace periodlab
