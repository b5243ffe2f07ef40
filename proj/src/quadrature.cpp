#include "periodlab/quadrature.hpp"

#include <cmath>

namespace periodlab {

namespace {

struct Node {
    Real x, dlo, dhi, w;
};

// node of the tanh-sinh substitution at abscissa t, mapped to (lo,hi)
Node de_node(const Real& t, const Real& lo, const Real& hi) {
    Real half_pi = const_pi() / 2;
    Real u = half_pi * sinh(t);
    Real e2u = exp(-2 * abs(u));
    Real d_far = 2 * e2u / (1 + e2u);    // 1 - |tanh u|
    Real d_near = 2 / (1 + e2u);         // 1 + |tanh u|
    Real width = hi - lo;
    Node n;
    Real ch = cosh(u);
    n.w = half_pi * cosh(t) / (ch * ch) * (width / 2);
    if (u >= 0) {
        n.dhi = width / 2 * d_far;
        n.dlo = width / 2 * d_near;
        n.x = hi - n.dhi;
    } else {
        n.dlo = width / 2 * d_far;
        n.dhi = width / 2 * d_near;
        n.x = lo + n.dlo;
    }
    return n;
}

} // namespace

Complex tanh_sinh(const EndpointAwareFn& f, const Real& lo, const Real& hi,
                  const PrecisionCtx& ctx, int max_level) {
    ScopedPrecision guard(PrecisionCtx(ctx.bits + 24));
    Real tol = pow2(-static_cast<long>(ctx.bits) - 8);
    // abscissa range sized so the truncated tail stays below tolerance even
    // for endpoint exponents as strong as -15/16
    double t_max_d = std::asinh(2.0 / 3.141592653589793 * 0.6931471805599453 *
                                (static_cast<double>(ctx.bits) + 48) * 16.0);
    Real h(1);
    Complex node_total(0); // sum of w*f over all nodes at the current spacing
    Complex prev(0);
    for (int level = 0; level <= max_level; ++level) {
        long nmax = static_cast<long>(t_max_d / static_cast<double>(h)) + 4;
        // level 0: all multiples of h; afterwards only the odd multiples
        for (int dir = -1; dir <= 1; dir += 2) {
            int quiet = 0;
            for (long n = (level == 0 ? (dir < 0 ? 1 : 0) : 1); n <= nmax;
                 n += (level == 0 ? 1 : 2)) {
                Real t = dir * n * h;
                Node nd = de_node(t, lo, hi);
                if (nd.dlo <= 0 || nd.dhi <= 0) break;
                Complex term = Complex(nd.w) * f(nd.x, nd.dlo, nd.dhi);
                node_total += term;
                if (abs(term) < tol * (1 + abs(node_total))) {
                    if (++quiet >= 5) break;
                } else
                    quiet = 0;
            }
        }
        Complex sum = Complex(h) * node_total;
        if (level >= 2 && abs(sum - prev) < pow2(-static_cast<long>(ctx.bits) + 4) * (1 + abs(sum)))
            return sum;
        prev = sum;
        h /= 2;
    }
    throw Error("QuadratureNonconvergence", "tanh-sinh did not stabilize");
}

Complex segment_power_integral(const Complex& p, const Complex& q,
                               const std::vector<SegmentFactor>& factors,
                               const PrecisionCtx& ctx) {
    ScopedPrecision guard(PrecisionCtx(ctx.bits + 24));
    Complex dir = q - p;
    if (dir.re == 0 && dir.im == 0) throw Error("DegenerateSegment", "zero-length segment");
    Complex mid = p + Complex(Real(1) / 2) * dir;
    Complex log_dir = log(dir);
    Complex log_rev = log(-dir);

    struct Prepared {
        int kind; // 0 interior, 1 at p, 2 at q
        Complex root, log_mid;
        Real e;
    };
    std::vector<Prepared> prep;
    for (const auto& fac : factors) {
        if (fac.exponent == 0) continue;
        Prepared pr;
        pr.root = fac.root;
        pr.e = to_real(fac.exponent);
        if (fac.root.re == p.re && fac.root.im == p.im) {
            if (fac.exponent <= -1) throw Error("NonintegrableEndpoint", "exponent <= -1 at endpoint");
            pr.kind = 1;
        } else if (fac.root.re == q.re && fac.root.im == q.im) {
            if (fac.exponent <= -1) throw Error("NonintegrableEndpoint", "exponent <= -1 at endpoint");
            pr.kind = 2;
        } else {
            // reject roots lying on the open segment
            Complex s0 = (fac.root - p) / dir;
            if (s0.im == 0 && s0.re > 0 && s0.re < 1)
                throw Error("BranchAmbiguity", "factor root lies on the segment");
            pr.kind = 0;
            pr.log_mid = log(mid - fac.root);
        }
        prep.push_back(pr);
    }

    auto integrand = [&](const Real& s, const Real& dlo, const Real& dhi) -> Complex {
        Complex L(0);
        Complex x = p + Complex(s) * dir;
        for (const auto& pr : prep) {
            Complex lf;
            if (pr.kind == 1)
                lf = Complex(log(dlo)) + log_dir;
            else if (pr.kind == 2)
                lf = Complex(log(dhi)) + log_rev;
            else
                lf = pr.log_mid + log((x - pr.root) / (mid - pr.root));
            L += Complex(pr.e) * lf;
        }
        return exp(L);
    };
    return tanh_sinh(integrand, Real(0), Real(1), ctx) * dir;
}

namespace {

// midpoint-principal log of (x - root) as used on segment p->q, evaluated at
// an endpoint of the segment; root must not be at that endpoint
Complex conv_log_at(const Complex& p, const Complex& q, const Complex& root, const Complex& x) {
    Complex mid = p + Complex(Real(1) / 2) * (q - p);
    if (root.re == p.re && root.im == p.im)
        return Complex(log(abs(x - p) / abs(q - p))) + log(q - p);
    if (root.re == q.re && root.im == q.im)
        return Complex(log(abs(x - q) / abs(q - p))) + log(p - q);
    return log(mid - root) + log((x - root) / (mid - root));
}

} // namespace

Complex path_power_integral(const std::vector<Complex>& vertices,
                            const std::vector<SegmentFactor>& factors,
                            const PrecisionCtx& ctx) {
    if (vertices.size() < 2) throw Error("BadPath", "need at least two vertices");
    ScopedPrecision guard(PrecisionCtx(ctx.bits + 24));
    size_t nf = factors.size();
    std::vector<Complex> offset(nf, Complex(0));
    Real two_pi = 2 * const_pi();
    Complex total(0);

    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
        const Complex& a = vertices[i];
        const Complex& b = vertices[i + 1];
        // interior-vertex factor roots are not supported
        for (size_t k = 0; k < nf; ++k) {
            bool at_a = factors[k].root.re == a.re && factors[k].root.im == a.im;
            bool at_b = factors[k].root.re == b.re && factors[k].root.im == b.im;
            if ((at_a && i != 0) || (at_b && i + 2 != vertices.size()))
                throw Error("BranchAmbiguity", "factor root at an interior path vertex");
        }
        Complex seg = segment_power_integral(a, b, factors, ctx);
        Complex phase(1);
        for (size_t k = 0; k < nf; ++k)
            phase *= exp(Complex(to_real(factors[k].exponent)) * offset[k]);
        total += phase * seg;
        // carry branch continuity across the junction at b
        if (i + 2 < vertices.size()) {
            const Complex& c = vertices[i + 2];
            for (size_t k = 0; k < nf; ++k) {
                Complex l_here = conv_log_at(a, b, factors[k].root, b);
                Complex l_next = conv_log_at(b, c, factors[k].root, b);
                Complex diff = l_here - l_next;
                Real m = diff.im / two_pi;
                long mi = static_cast<long>(round(m));
                if (abs(m - Real(mi)) > Real(1) / 100 || abs(diff.re) > Real(1) / 100)
                    throw Error("BranchAmbiguity", "junction branch offset not a winding");
                offset[k] += Complex(Real(0), two_pi * mi);
            }
        }
    }
    return total;
}

std::vector<Complex> commutator_path(const Complex& p, const Complex& q) {
    Complex dir = q - p;
    Complex m = p + Complex(Real(1) / 2) * dir;
    Real h = abs(dir) / 4;
    auto square = [&](const Complex& center, bool ccw) {
        // corners, starting from the one facing the midpoint m
        std::vector<Complex> cs;
        Complex toward = (m - center) / Complex(abs(m - center));
        Complex c0 = center + Complex(h) * toward;
        // rotate by +-90 degrees around the center
        Complex rot = ccw ? Complex(Real(0), Real(1)) : Complex(Real(0), Real(-1));
        Complex v = Complex(h) * toward;
        for (int k = 0; k < 4; ++k) {
            cs.push_back(center + v);
            v = v * rot;
        }
        (void)c0;
        return cs;
    };
    std::vector<Complex> path{m};
    auto add_loop = [&](const Complex& center, bool ccw) {
        auto cs = square(center, ccw);
        for (const auto& c : cs) path.push_back(c);
        path.push_back(cs[0]);
        path.push_back(m);
    };
    add_loop(q, true);
    add_loop(p, true);
    add_loop(q, false);
    add_loop(p, false);
    return path;
}

Complex pochhammer_commutator_integral(const Complex& p, const Complex& q,
                                       const std::vector<SegmentFactor>& factors,
                                       const PrecisionCtx& ctx) {
    return path_power_integral(commutator_path(p, q), factors, ctx);
}

} // namespace periodlab
