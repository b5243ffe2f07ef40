#include "periodlab/ode.hpp"
#include <sstream>
#include <algorithm>

namespace periodlab {

// ---- ScalarODE -----------------------------------------------------------

ScalarODE ScalarODE::primitive() const {
    BigInt den_lcm(1), num_gcd(0);
    for (const auto& p : coeffs)
        for (const auto& q : p.coeffs()) {
            den_lcm = lcm(den_lcm, denominator(q));
            num_gcd = gcd(num_gcd, numerator(q));
        }
    if (num_gcd == 0) return *this;
    if (num_gcd < 0) num_gcd = -num_gcd;
    Rational s(den_lcm, num_gcd);
    ScalarODE out;
    out.coeffs.reserve(coeffs.size());
    for (const auto& p : coeffs) out.coeffs.push_back(p * s);
    if (!out.coeffs.empty() && !out.leading().is_zero() && out.leading().lc() < 0)
        for (auto& p : out.coeffs) p *= Rational(-1);
    return out;
}

std::string ScalarODE::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeffs[i].str(var) << ")*y";
        if (i > 0 && i <= 3) os << std::string(i, '\'');
        else if (i > 3) os << "^(" << i << ")";
        first = false;
    }
    os << " = 0";
    return os.str();
}

// ---- FirstOrderSystem ----------------------------------------------------

Poly FirstOrderSystem::singular_locus() const {
    Poly l(1);
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) l = lcm(l, A(i, j).den());
    return l;
}

std::vector<Complex> FirstOrderSystem::singular_points(const PrecisionCtx& ctx) const {
    Poly l = singular_locus();
    if (l.degree() < 1) return {};
    auto roots = poly_roots_numeric(l, ctx);
    // drop duplicates from multiplicities
    std::vector<Complex> out;
    for (const auto& r : roots) {
        bool dup = false;
        for (const auto& o : out)
            if (abs(r - o) < pow2(-static_cast<long>(ctx.bits / 4))) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(r);
    }
    return out;
}

CPath CPath::square_loop(const Complex& base, const Complex& around, const Real& half_side) {
    std::vector<Complex> corners = {
        around + Complex(half_side, half_side),
        around + Complex(-half_side, half_side),
        around + Complex(-half_side, -half_side),
        around + Complex(half_side, -half_side),
    };
    size_t start = 0;
    Real best = abs(base - corners[0]);
    for (size_t i = 1; i < 4; ++i) {
        Real d = abs(base - corners[i]);
        if (d < best) {
            best = d;
            start = i;
        }
    }
    CPath p;
    p.vertices.push_back(base);
    for (size_t k = 0; k <= 4; ++k) p.vertices.push_back(corners[(start + k) % 4]);
    p.vertices.push_back(base);
    return p;
}

static Real segment_point_distance(const Complex& p, const Complex& q, const Complex& s) {
    Complex d = q - p;
    Real len2 = norm(d);
    if (len2 == 0) return abs(s - p);
    Real t = ((s.re - p.re) * d.re + (s.im - p.im) * d.im) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Complex proj = p + Complex(t) * d;
    return abs(s - proj);
}

Real CPath::clearance(const std::vector<Complex>& singularities) const {
    Real best(-1);
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        for (const auto& s : singularities) {
            Real d = segment_point_distance(vertices[i], vertices[i + 1], s);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

FirstOrderSystem companion_system(const ScalarODE& ode, const std::string& var) {
    long m = ode.order();
    if (m < 1) throw Error("BadODE", "order must be >= 1");
    FirstOrderSystem sys;
    sys.var = var;
    sys.A = RatFuncMatrix(m, m);
    for (long i = 0; i + 1 < m; ++i) sys.A(i, i + 1) = RationalFunction(1);
    for (long j = 0; j < m; ++j)
        sys.A(m - 1, j) = RationalFunction(-ode.coeffs[j], ode.leading());
    return sys;
}

// ---- cyclic vector -------------------------------------------------------

ScalarODE system_to_scalar(const FirstOrderSystem& sys, const RFVector& seed, size_t order_cap) {
    if (order_cap > sys.dim()) order_cap = sys.dim();
    std::vector<RFVector> rows;
    RFVector u = seed;
    rows.push_back(u);
    for (size_t k = 1; k <= order_cap; ++k) {
        RFVector next = sys.A.apply_left(u);
        for (size_t j = 0; j < u.size(); ++j) next[j] += u[j].derivative();
        u = next;
        rows.push_back(u);
        auto dep = linear_dependency(rows);
        if (dep) {
            // sum c_k y^(k) = 0; clear denominators to primitive integer form
            Poly common(1);
            for (const auto& c : *dep) common = lcm(common, c.den());
            ScalarODE ode;
            ode.coeffs.reserve(dep->size());
            for (const auto& c : *dep) {
                RationalFunction cleared = c * RationalFunction(common);
                ode.coeffs.push_back(cleared.num());
            }
            return ode.primitive();
        }
    }
    throw Error("NoRelationWithinCap", "no scalar relation up to order " + std::to_string(order_cap));
}

ScalarODE system_to_scalar(const FirstOrderSystem& sys, size_t seed_index, size_t order_cap) {
    RFVector seed(sys.dim());
    seed[seed_index] = RationalFunction(1);
    return system_to_scalar(sys, seed, order_cap);
}

FirstOrderSystem gauge_transform(const FirstOrderSystem& sys, const RatFuncMatrix& G) {
    FirstOrderSystem out;
    out.var = sys.var;
    out.A = (G.derivative() + G * sys.A) * G.inverse();
    return out;
}

FirstOrderSystem pullback(const FirstOrderSystem& sys_in_x, const Poly& substitution,
                          const std::string& new_var) {
    if (substitution.degree() < 1) throw Error("BadSubstitution", "substitution must be nonconstant");
    RationalFunction ds{substitution.derivative()};
    FirstOrderSystem out;
    out.var = new_var;
    out.A = RatFuncMatrix(sys_in_x.A.rows(), sys_in_x.A.cols());
    for (size_t i = 0; i < out.A.rows(); ++i)
        for (size_t j = 0; j < out.A.cols(); ++j)
            out.A(i, j) = sys_in_x.A(i, j).compose(substitution) * ds;
    return out;
}

// ---- Taylor continuation -------------------------------------------------

// coefficients of p(z0 + s) for complex z0
static std::vector<Complex> shifted_coeffs(const Poly& p, const Complex& z0) {
    long d = p.degree();
    if (d < 0) return {Complex(0)};
    std::vector<Complex> c(d + 1);
    for (long i = 0; i <= d; ++i) c[i] = Complex(to_real(p.coeff(i)));
    // repeated synthetic division by (s - (-z0)) i.e. evaluate shifts
    for (long k = 0; k <= d; ++k)
        for (long i = d - 1; i >= k; --i) c[i] += z0 * c[i + 1];
    return c;
}

// first n terms of the Taylor series of num/den at z0
static std::vector<Complex> series_of_ratfunc(const RationalFunction& f, const Complex& z0,
                                              size_t n) {
    auto num = shifted_coeffs(f.num(), z0);
    auto den = shifted_coeffs(f.den(), z0);
    std::vector<Complex> q(n, Complex(0));
    Complex d0 = den[0];
    for (size_t k = 0; k < n; ++k) {
        Complex acc = k < num.size() ? num[k] : Complex(0);
        for (size_t j = 0; j < k; ++j)
            if (k - j < den.size()) acc -= q[j] * den[k - j];
        q[k] = acc / d0;
    }
    return q;
}

std::vector<Complex> continue_solution(const FirstOrderSystem& sys,
                                       const std::vector<Complex>& initial, const CPath& path,
                                       const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    size_t dim = sys.dim();
    if (initial.size() != dim) throw Error("DimensionMismatch", "initial vector size");
    auto sing = sys.singular_points(ctx);
    Real min_clear = path.clearance(sing);
    if (!sing.empty() && min_clear <= pow2(-40))
        throw Error("PathTooCloseToSingularity", "path clearance is not positive");

    Real tol = pow2(-static_cast<long>(ctx.bits) - 16);
    std::vector<Complex> y = initial;
    for (size_t seg = 0; seg + 1 < path.vertices.size(); ++seg) {
        Complex z = path.vertices[seg];
        Complex target = path.vertices[seg + 1];
        int safety = 0;
        while (abs(target - z) > 0) {
            if (++safety > 100000) throw Error("StepUnderflow", "continuation failed to advance");
            Real rho(-1);
            for (const auto& s : sing) {
                Real d = abs(z - s);
                if (rho < 0 || d < rho) rho = d;
            }
            Real remain = abs(target - z);
            Real h = remain;
            if (rho > 0 && h > Real(3) * rho / 8) h = Real(3) * rho / 8;
            Complex step = (target - z) * Complex(h / remain);

            // local series of A
            size_t nmax = 6 * ctx.bits + 64;
            size_t chunk = 48;
            std::vector<std::vector<std::vector<Complex>>> a(dim,
                std::vector<std::vector<Complex>>(dim));
            size_t have = 0;
            std::vector<std::vector<Complex>> yk; // solution series coefficients
            yk.push_back(y);
            std::vector<Complex> val = y;
            size_t k = 0;
            bool converged = false;
            Complex hc(step);
            Complex hpow(1);
            int quiet = 0;
            while (k < nmax) {
                if (k + 1 > have) {
                    size_t want = std::min(nmax, have + chunk);
                    for (size_t i = 0; i < dim; ++i)
                        for (size_t j = 0; j < dim; ++j)
                            a[i][j] = series_of_ratfunc(sys.A(i, j), z, want);
                    have = want;
                }
                // y_{k+1} = 1/(k+1) * sum_{j<=k} A_j y_{k-j}
                std::vector<Complex> next(dim, Complex(0));
                for (size_t j = 0; j <= k; ++j)
                    for (size_t i = 0; i < dim; ++i)
                        for (size_t l = 0; l < dim; ++l)
                            next[i] += a[i][l][j] * yk[k - j][l];
                Real inv_k1 = Real(1) / static_cast<long>(k + 1);
                for (auto& e : next) {
                    e.re *= inv_k1;
                    e.im *= inv_k1;
                }
                yk.push_back(next);
                hpow *= hc;
                Real term(0);
                for (size_t i = 0; i < dim; ++i) {
                    val[i] += next[i] * hpow;
                    Real m = abs(next[i] * hpow);
                    if (m > term) term = m;
                }
                Real scale(0);
                for (const auto& v : val) {
                    Real m = abs(v);
                    if (m > scale) scale = m;
                }
                if (scale == 0) scale = 1;
                if (term < tol * scale) {
                    if (++quiet >= 3) {
                        converged = true;
                        break;
                    }
                } else {
                    quiet = 0;
                }
                ++k;
            }
            if (!converged) throw Error("StepUnderflow", "Taylor series did not converge");
            y = val;
            if (h == remain)
                z = target;
            else
                z += step;
        }
    }
    return y;
}

MonodromyResult loop_monodromy(const FirstOrderSystem& sys, const Complex& base,
                               const Complex& around, const PrecisionCtx& ctx,
                               const std::vector<std::vector<Complex>>& basis) {
    ScopedPrecision guard(ctx);
    auto sing = sys.singular_points(ctx);
    Real half = Real(4) * abs(base - around) / 10;
    for (const auto& s : sing) {
        if (abs(s - around) < pow2(-static_cast<long>(ctx.bits / 4))) continue;
        Real d = Real(4) * abs(s - around) / 10;
        if (d < half) half = d;
    }
    CPath loop = CPath::square_loop(base, around, half);

    size_t dim = sys.dim();
    CMatrix W = basis;
    if (W.empty()) {
        W.assign(dim, std::vector<Complex>(dim, Complex(0)));
        for (size_t i = 0; i < dim; ++i) W[i][i] = Complex(1);
    }
    CMatrix cont(dim, std::vector<Complex>(dim));
    for (size_t col = 0; col < dim; ++col) {
        std::vector<Complex> v(dim);
        for (size_t i = 0; i < dim; ++i) v[i] = W[i][col];
        auto r = continue_solution(sys, v, loop, ctx);
        for (size_t i = 0; i < dim; ++i) cont[i][col] = r[i];
    }
    MonodromyResult res;
    res.base = base;
    res.around = around;
    res.matrix = cmat_mul(cmat_inverse(W), cont);
    return res;
}

// ---- indicial exponents --------------------------------------------------

static ScalarODE ode_at_infinity(const ScalarODE& ode) {
    // t = 1/s: d/dt = -s^2 d/ds. Represent operators as polynomials in s
    // applied to derivative stacks: build (-s^2 d/ds)^k recursively.
    long m = ode.order();
    // ops[k][j] = polynomial coefficient of d^j/ds^j in (-s^2 d/ds)^k
    std::vector<std::vector<Poly>> ops(m + 1);
    ops[0] = {Poly(1)};
    Poly ms2({Rational(0), Rational(0), Rational(-1)}); // -s^2
    for (long k = 1; k <= m; ++k) {
        std::vector<Poly> cur(k + 1);
        for (long j = 0; j < static_cast<long>(ops[k - 1].size()); ++j) {
            const Poly& c = ops[k - 1][j];
            // -s^2 d/ds (c * d^j) = -s^2 (c' d^j + c d^{j+1})
            cur[j] += ms2 * c.derivative();
            cur[j + 1] += ms2 * c;
        }
        ops[k] = cur;
    }
    // p_k(1/s) -> rational; multiply everything by s^deg_max to clear
    long clear = 0;
    for (const auto& p : ode.coeffs) clear = std::max(clear, p.degree());
    std::vector<Poly> out;
    for (long j = 0; j <= m; ++j) out.push_back(Poly());
    for (long k = 0; k <= m; ++k) {
        // p_k(1/s) * s^clear = sum_i a_i s^{clear-i}
        Poly pk;
        for (long i = 0; i <= ode.coeffs[k].degree(); ++i)
            pk += Poly::monomial(ode.coeffs[k].coeff(i), clear - i);
        for (long j = 0; j < static_cast<long>(ops[k].size()); ++j) out[j] += pk * ops[k][j];
    }
    ScalarODE res;
    res.coeffs = out;
    return res.primitive();
}

std::vector<Complex> indicial_exponents(const ScalarODE& ode, const Complex& point,
                                        const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    long m = ode.order();
    std::vector<std::vector<Complex>> taylor(m + 1);
    const ScalarODE* use = &ode;
    ScalarODE inf_ode;
    Complex x0 = point;
    if (!boost::multiprecision::isfinite(point.re)) {
        inf_ode = ode_at_infinity(ode);
        use = &inf_ode;
        x0 = Complex(0);
    }
    Real maxmag(0);
    for (long i = 0; i <= m; ++i) {
        taylor[i] = shifted_coeffs(use->coeffs[i], x0);
        for (const auto& c : taylor[i]) {
            Real a = abs(c);
            if (a > maxmag) maxmag = a;
        }
    }
    Real eps = pow2(-static_cast<long>(ctx.bits / 2)) * maxmag;
    auto valuation = [&](long i) -> long {
        for (size_t k = 0; k < taylor[i].size(); ++k)
            if (abs(taylor[i][k]) > eps) return static_cast<long>(k);
        return -1; // identically ~0
    };
    long mu = 0;
    bool mu_set = false;
    std::vector<long> nu(m + 1, -1);
    for (long i = 0; i <= m; ++i) {
        nu[i] = valuation(i);
        if (nu[i] < 0) continue;
        long v = nu[i] - i;
        if (!mu_set || v < mu) {
            mu = v;
            mu_set = true;
        }
    }
    if (!mu_set) throw Error("BadODE", "zero operator");
    if (nu[m] < 0 || nu[m] - m > mu)
        throw Error("IrregularSingularity", "indicial degree deficit");
    // I(r) = sum over i with nu_i - i = mu of a_i r(r-1)...(r-i+1)
    std::vector<Complex> I{Complex(0)};
    for (long i = 0; i <= m; ++i) {
        if (nu[i] < 0 || nu[i] - i != mu) continue;
        // falling factorial polynomial of degree i
        std::vector<Complex> ff{Complex(1)};
        for (long j = 0; j < i; ++j) {
            std::vector<Complex> nf(ff.size() + 1, Complex(0));
            for (size_t k = 0; k < ff.size(); ++k) {
                nf[k + 1] += ff[k];
                nf[k] -= Complex(Real(j)) * ff[k];
            }
            ff = nf;
        }
        Complex ai = taylor[i][nu[i]];
        if (ff.size() > I.size()) I.resize(ff.size(), Complex(0));
        for (size_t k = 0; k < ff.size(); ++k) I[k] += ai * ff[k];
    }
    while (I.size() > 1 && abs(I.back()) <= eps) I.pop_back();
    if (I.size() <= 1) return {};
    return aberth_roots(I, ctx);
}

SingularityKind apparent_singularity_test(const ScalarODE& ode, const Complex& point,
                                          const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    auto exps = indicial_exponents(ode, point, ctx);
    Real tol = pow2(-static_cast<long>(ctx.bits / 3));
    bool exps_ok = true;
    std::vector<long> ints;
    for (const auto& e : exps) {
        Real r = round(e.re);
        if (abs(e.im) > tol || abs(e.re - r) > tol || r < 0) {
            exps_ok = false;
            break;
        }
        ints.push_back(static_cast<long>(r));
    }
    if (exps_ok) {
        std::sort(ints.begin(), ints.end());
        for (size_t i = 0; i + 1 < ints.size(); ++i)
            if (ints[i] == ints[i + 1]) exps_ok = false;
    }

    auto sys = companion_system(ode, "t");
    auto sing = sys.singular_points(ctx);
    Real r(-1);
    for (const auto& s : sing) {
        if (abs(s - point) < pow2(-static_cast<long>(ctx.bits / 4))) continue;
        Real d = abs(s - point);
        if (r < 0 || d < r) r = d;
    }
    if (r < 0) r = 1;
    Complex base = point + Complex(r / 2);
    auto mono = loop_monodromy(sys, base, point, ctx);
    Real dev(0);
    for (size_t i = 0; i < mono.matrix.size(); ++i)
        for (size_t j = 0; j < mono.matrix.size(); ++j) {
            Complex expect = (i == j) ? Complex(1) : Complex(0);
            Real d = abs(mono.matrix[i][j] - expect);
            if (d > dev) dev = d;
        }
    long digits = static_cast<long>(ctx.digits10());
    bool mono_trivial = dev < pow(Real(10), -(digits - 10));

    if (exps_ok && mono_trivial) return SingularityKind::Apparent;
    if (!exps_ok && !mono_trivial) return SingularityKind::TrueSingularity;
    // exponent test is necessary for apparent: trivial monodromy with bad
    // exponents (or vice versa) means the checks disagree
    throw Error("Inconclusive", "exponent and monodromy criteria disagree");
}

// ---- small complex matrices ----------------------------------------------

CMatrix cmat_mul(const CMatrix& a, const CMatrix& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    CMatrix r(n, std::vector<Complex>(m, Complex(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < k; ++l) r[i][j] += a[i][l] * b[l][j];
    return r;
}

CMatrix cmat_inverse(const CMatrix& a) {
    size_t n = a.size();
    CMatrix m = a;
    CMatrix inv(n, std::vector<Complex>(n, Complex(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Complex(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        Real best = abs(m[col][col]);
        for (size_t i = col + 1; i < n; ++i)
            if (abs(m[i][col]) > best) {
                best = abs(m[i][col]);
                piv = i;
            }
        if (best == 0) throw Error("SingularMatrix", "complex matrix not invertible");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Complex p = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            Complex f = m[i][col];
            if (f == Complex(0)) continue;
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Real cmat_max_diff(const CMatrix& a, const CMatrix& b) {
    Real d(0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) {
            Real e = abs(a[i][j] - b[i][j]);
            if (e > d) d = e;
        }
    return d;
}

Complex cmat_det(const CMatrix& a) {
    size_t n = a.size();
    CMatrix m = a;
    Complex det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        Real best = abs(m[col][col]);
        for (size_t i = col + 1; i < n; ++i)
            if (abs(m[i][col]) > best) {
                best = abs(m[i][col]);
                piv = i;
            }
        if (best == 0) return Complex(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            Complex f = m[i][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

CPath parse_path(const std::string& text, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    CPath p;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto comma = part.find(',');
        if (comma == std::string::npos)
            p.vertices.push_back(Complex(Real(part)));
        else
            p.vertices.push_back(
                Complex(Real(part.substr(0, comma)), Real(part.substr(comma + 1))));
    }
    if (p.vertices.size() < 2) throw Error("ParseError", "path needs at least two vertices");
    return p;
}

} // namespace periodlab
