#include "periodlab/algebraicity.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace periodlab {

namespace {

BigInt round_to_int(const Real& x) {
    BigInt r;
    mpfr_get_z(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

long bit_length(const BigInt& x) {
    if (x == 0) return 1;
    return static_cast<long>(mpz_sizeinbase(x.backend().data(), 2));
}

Real dot_rr(const std::vector<Real>& a, const std::vector<Real>& b) {
    Real s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

void lll_reduce(std::vector<std::vector<BigInt>>& basis, const PrecisionCtx& ctx) {
    size_t m = basis.size();
    if (m < 2) return;
    size_t d = basis[0].size();
    ScopedPrecision guard(PrecisionCtx(ctx.bits + 96));
    Real delta = Real(99) / 100;

    std::vector<std::vector<Real>> mu(m, std::vector<Real>(m, Real(0)));
    std::vector<Real> B(m, Real(0));
    auto gso = [&]() {
        std::vector<std::vector<Real>> bs(m, std::vector<Real>(d));
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < d; ++j) bs[i][j] = Real(basis[i][j]);
            for (size_t k = 0; k < i; ++k) {
                Real num(0);
                for (size_t j = 0; j < d; ++j) num += Real(basis[i][j]) * bs[k][j];
                mu[i][k] = num / B[k];
                for (size_t j = 0; j < d; ++j) bs[i][j] -= mu[i][k] * bs[k][j];
            }
            B[i] = dot_rr(bs[i], bs[i]);
        }
    };
    gso();

    size_t k = 1;
    while (k < m) {
        for (size_t jj = k; jj-- > 0;) {
            BigInt q = round_to_int(mu[k][jj]);
            if (q != 0) {
                for (size_t t = 0; t < d; ++t) basis[k][t] -= q * basis[jj][t];
                Real qr(q);
                for (size_t l = 0; l < jj; ++l) mu[k][l] -= qr * mu[jj][l];
                mu[k][jj] -= qr;
            }
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            gso();
            k = k > 1 ? k - 1 : 1;
        }
    }
}

namespace {

// shared core: one integer coefficient vector against one or two scaled
// numeric columns
std::optional<IntegerRelationResult> relation_core(const std::vector<std::vector<Real>>& cols,
                                                   size_t n, const BigInt& max_height,
                                                   const PrecisionCtx& ctx,
                                                   const std::function<Real(const std::vector<BigInt>&)>& residual_of) {
    long hbits = bit_length(max_height);
    if (static_cast<double>(ctx.bits) < 2.0 * hbits * static_cast<double>(n))
        throw Error("PrecisionTooLow",
                    "need at least " + std::to_string(static_cast<long>(2.0 * hbits * n)) +
                        " bits for height 2^" + std::to_string(hbits) + " and length " +
                        std::to_string(n));

    ScopedPrecision guard(PrecisionCtx(ctx.bits + 64));
    long shift = static_cast<long>(ctx.bits) - 16;
    Real scale = pow2(shift);

    std::vector<std::vector<BigInt>> basis(n, std::vector<BigInt>(n + cols.size(), BigInt(0)));
    for (size_t i = 0; i < n; ++i) {
        basis[i][i] = 1;
        for (size_t c = 0; c < cols.size(); ++c)
            basis[i][n + c] = round_to_int(scale * cols[c][i]);
    }
    lll_reduce(basis, ctx);

    Real tol = pow2(-static_cast<long>(ctx.bits) / 2);
    std::optional<IntegerRelationResult> best;
    for (const auto& row : basis) {
        std::vector<BigInt> a(row.begin(), row.begin() + n);
        bool zero = true, bounded = true;
        for (const auto& c : a) {
            if (c != 0) zero = false;
            if (abs(c) > max_height) bounded = false;
        }
        if (zero || !bounded) continue;
        Real res = residual_of(a);
        if (res >= tol) continue;
        BigInt g(0);
        for (const auto& c : a) g = gcd(g, c);
        for (auto& c : a) c /= g;
        for (const auto& c : a)
            if (c != 0) {
                if (c < 0)
                    for (auto& cc : a) cc = -cc;
                break;
            }
        if (!best || res < best->residual) {
            best = IntegerRelationResult{a, res, max_height, static_cast<long>(ctx.bits)};
        }
    }
    return best;
}

} // namespace

std::optional<IntegerRelationResult> integer_relation(const std::vector<Real>& values,
                                                      const BigInt& max_height,
                                                      const PrecisionCtx& ctx) {
    if (values.size() < 2) throw Error("BadInput", "need at least two values");
    return relation_core({values}, values.size(), max_height, ctx,
                         [&](const std::vector<BigInt>& a) {
                             Real s(0);
                             for (size_t i = 0; i < values.size(); ++i)
                                 s += Real(a[i]) * values[i];
                             return abs(Complex(s));
                         });
}

std::optional<IntegerRelationResult> integer_relation(const std::vector<Complex>& values,
                                                      const BigInt& max_height,
                                                      const PrecisionCtx& ctx) {
    if (values.size() < 2) throw Error("BadInput", "need at least two values");
    std::vector<Real> re, im;
    for (const auto& v : values) {
        re.push_back(v.re);
        im.push_back(v.im);
    }
    return relation_core({re, im}, values.size(), max_height, ctx,
                         [&](const std::vector<BigInt>& a) {
                             Complex s(0);
                             for (size_t i = 0; i < values.size(); ++i)
                                 s += Complex(Real(a[i])) * values[i];
                             return abs(s);
                         });
}

std::string MinimalPolynomialCandidate::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = coefficients.size(); i-- > 0;) {
        const BigInt& c = coefficients[i];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.str();
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::optional<MinimalPolynomialCandidate> minimal_polynomial(const Complex& x, long max_deg,
                                                             const BigInt& max_height,
                                                             const PrecisionCtx& ctx) {
    if (max_deg < 1) throw Error("BadInput", "max_deg must be at least 1");
    ScopedPrecision guard(ctx);
    Real tiny = pow2(-static_cast<long>(ctx.bits) / 2);
    bool real_input = abs(x.im) < tiny;
    for (long d = 1; d <= max_deg; ++d) {
        std::optional<IntegerRelationResult> rel;
        if (real_input) {
            std::vector<Real> vals;
            Real p(1);
            for (long i = 0; i <= d; ++i) {
                vals.push_back(p);
                p *= x.re;
            }
            rel = integer_relation(vals, max_height, ctx);
        } else {
            std::vector<Complex> vals;
            Complex p(1);
            for (long i = 0; i <= d; ++i) {
                vals.push_back(p);
                p *= x;
            }
            rel = integer_relation(vals, max_height, ctx);
        }
        if (!rel) continue;
        std::vector<BigInt> c = rel->coefficients;
        while (c.size() > 1 && c.back() == 0) c.pop_back();
        if (c.size() < 2) continue;
        if (c.back() < 0)
            for (auto& cc : c) cc = -cc;
        BigInt h(0);
        for (const auto& cc : c) h = max(h, abs(cc));
        MinimalPolynomialCandidate out;
        out.coefficients = c;
        out.degree = static_cast<long>(c.size()) - 1;
        out.height = h;
        out.residual = rel->residual;
        return out;
    }
    return std::nullopt;
}

AlgebraicityReport sim_test(const Complex& r, const Complex& s, long max_deg,
                            const BigInt& max_height, const PrecisionCtx& ctx) {
    if (abs(s) == 0) throw Error("DivisionByZero", "sim_test against zero");
    AlgebraicityReport rep;
    rep.max_deg = max_deg;
    rep.max_height = max_height;
    rep.precision_bits = static_cast<long>(ctx.bits);
    Complex q = r / s;
    auto mp = minimal_polynomial(q, max_deg, max_height, ctx);
    if (mp) {
        rep.verdict = AlgebraicityVerdict::AlgebraicFound;
        rep.polynomial = *mp;
        rep.note = "quotient satisfies " + mp->str();
    } else {
        rep.verdict = AlgebraicityVerdict::NoRelationAtBounds;
        rep.note = "no integer relation at the stated degree/height bounds";
    }
    return rep;
}

namespace {

// v = -a1/a0 when (a0, a1) annihilates (v, 1)
std::optional<Rational> recognize_rational(const Real& v, const BigInt& max_height,
                                           const PrecisionCtx& ctx) {
    auto rel = integer_relation(std::vector<Real>{v, Real(1)}, max_height, ctx);
    if (!rel || rel->coefficients[0] == 0) return std::nullopt;
    return Rational(-rel->coefficients[1], rel->coefficients[0]);
}

} // namespace

std::optional<Cyclotomic3Result> in_cyclotomic3(const Complex& x, const BigInt& max_height,
                                                const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    Real s3 = sqrt(Real(3));
    auto q = recognize_rational(2 * x.im / s3, max_height, ctx);
    if (!q) return std::nullopt;
    auto p = recognize_rational(x.re + to_real(*q) / 2, max_height, ctx);
    if (!p) return std::nullopt;
    Complex zeta3(Real(-1) / 2, s3 / 2);
    Complex back = Complex(*p) + Complex(*q) * zeta3;
    if (abs(back - x) >= pow2(-static_cast<long>(ctx.bits) / 2)) return std::nullopt;
    return Cyclotomic3Result{*p, *q};
}

Real gamma_third_cubed_over_pi2(const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    Real g = gamma_rat(Rational(1, 3), ctx);
    Real pi = const_pi();
    return g * g * g / (pi * pi);
}

AlgebraicityReport gamma_quotient_test(const Complex& value, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    // deg 12 / height 2^30: the quotients arising at the CM points of the
    // sextic family are twelfth roots of rationals like 3^6 5^3 / 2^28
    return sim_test(value, Complex(gamma_third_cubed_over_pi2(ctx)), 12, BigInt(1) << 30, ctx);
}

} // namespace periodlab
