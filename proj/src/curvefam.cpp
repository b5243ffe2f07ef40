#include "periodlab/curvefam.hpp"
#include "periodlab/hypergeom.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>

namespace periodlab {

// ---- Q(zeta12) ------------------------------------------------------------

bool Cyclo12::is_zero() const {
    for (const auto& q : c)
        if (q != 0) return false;
    return true;
}

bool Cyclo12::is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

Cyclo12 Cyclo12::operator-() const {
    Cyclo12 r;
    for (size_t i = 0; i < 4; ++i) r.c[i] = -c[i];
    return r;
}

Cyclo12& Cyclo12::operator+=(const Cyclo12& o) {
    for (size_t i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
}

Cyclo12& Cyclo12::operator-=(const Cyclo12& o) {
    for (size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
}

Cyclo12 Cyclo12::operator*(const Cyclo12& o) const {
    std::array<Rational, 7> t{};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) t[i + j] += c[i] * o.c[j];
    // w^4 = w^2 - 1, w^5 = w^3 - w, w^6 = -1
    t[2] += t[4];
    t[0] -= t[4];
    t[3] += t[5];
    t[1] -= t[5];
    t[0] -= t[6];
    Cyclo12 r;
    for (size_t i = 0; i < 4; ++i) r.c[i] = t[i];
    return r;
}

Cyclo12 Cyclo12::inverse() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero cyclotomic value");
    // columns of the multiplication-by-*this matrix in the power basis
    std::array<std::array<Rational, 4>, 4> M;
    for (size_t j = 0; j < 4; ++j) {
        Cyclo12 wj;
        wj.c[j] = 1;
        Cyclo12 col = *this * wj;
        for (size_t i = 0; i < 4; ++i) M[i][j] = col.c[i];
    }
    std::array<Rational, 4> rhs{};
    rhs[0] = 1;
    for (size_t col = 0; col < 4; ++col) {
        size_t piv = col;
        while (piv < 4 && M[piv][col] == 0) ++piv;
        if (piv == 4) throw Error("DivisionByZero", "singular multiplication matrix");
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        Rational p = M[col][col];
        for (size_t j = 0; j < 4; ++j) M[col][j] /= p;
        rhs[col] /= p;
        for (size_t i = 0; i < 4; ++i) {
            if (i == col || M[i][col] == 0) continue;
            Rational f = M[i][col];
            for (size_t j = 0; j < 4; ++j) M[i][j] -= f * M[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    Cyclo12 r;
    for (size_t i = 0; i < 4; ++i) r.c[i] = rhs[i];
    return r;
}

Complex Cyclo12::to_complex(const PrecisionCtx& ctx) const {
    ScopedPrecision guard(ctx);
    Complex w = cis(const_pi() / 6);
    Complex acc(0), pw(1);
    for (size_t i = 0; i < 4; ++i) {
        acc += Complex(c[i]) * pw;
        pw *= w;
    }
    return acc;
}

std::string Cyclo12::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < 4; ++i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        os << c[i].str();
        if (i > 0) os << "*w^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ---- radical ring ---------------------------------------------------------

bool RadicalValue::is_zero() const {
    for (const auto& e : coeff)
        if (!e.is_zero()) return false;
    return true;
}

bool RadicalValue::is_scalar() const {
    for (size_t i = 1; i < coeff.size(); ++i)
        if (!coeff[i].is_zero()) return false;
    return true;
}

const Cyclo12& RadicalValue::scalar() const {
    if (!is_scalar()) throw Error("NotScalar", "radical value has u-terms");
    return coeff[0];
}

std::string RadicalValue::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeff[i].str() << ")";
        if (i > 0) os << "*u^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

struct RingCtx {
    long k = 1;
    Cyclo12 pk;
};

RadicalValue rv_scalar(const RingCtx& rc, const Cyclo12& s) {
    RadicalValue v;
    v.k = rc.k;
    v.pk = rc.pk;
    v.coeff.assign(rc.k, Cyclo12());
    v.coeff[0] = s;
    return v;
}

RadicalValue rv_u(const RingCtx& rc) {
    RadicalValue v = rv_scalar(rc, Cyclo12(0));
    if (rc.k < 2) throw Error("BadRadical", "radical power must be at least 2");
    v.coeff[1] = Cyclo12(1);
    return v;
}

RadicalValue rv_add(const RadicalValue& a, const RadicalValue& b) {
    RadicalValue r = a;
    for (size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] += b.coeff[i];
    return r;
}

RadicalValue rv_sub(const RadicalValue& a, const RadicalValue& b) {
    RadicalValue r = a;
    for (size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] -= b.coeff[i];
    return r;
}

RadicalValue rv_neg(const RadicalValue& a) {
    RadicalValue r = a;
    for (auto& e : r.coeff) e = -e;
    return r;
}

RadicalValue rv_mul(const RadicalValue& a, const RadicalValue& b) {
    size_t k = a.coeff.size();
    std::vector<Cyclo12> t(2 * k - 1);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) t[i + j] += a.coeff[i] * b.coeff[j];
    RadicalValue r = a;
    for (auto& e : r.coeff) e = Cyclo12();
    for (size_t i = 0; i < t.size(); ++i) {
        if (i < k)
            r.coeff[i] += t[i];
        else
            r.coeff[i - k] += t[i] * a.pk;
    }
    return r;
}

// inverse of a single-term value c * u^j
RadicalValue rv_inv(const RadicalValue& a) {
    long j = -1;
    for (size_t i = 0; i < a.coeff.size(); ++i) {
        if (a.coeff[i].is_zero()) continue;
        if (j >= 0) throw Error("UnsupportedDivision", "division by a multi-term radical value");
        j = static_cast<long>(i);
    }
    if (j < 0) throw Error("ExceptionalPoint", "division by zero at the sample point");
    Cyclo12 cinv = a.coeff[j].inverse();
    RadicalValue r = a;
    for (auto& e : r.coeff) e = Cyclo12();
    if (j == 0) {
        r.coeff[0] = cinv;
    } else {
        // u^-j = u^{k-j} / u^k
        if (a.pk.is_zero()) throw Error("ExceptionalPoint", "degenerate radical at the sample");
        r.coeff[a.coeff.size() - j] = cinv * a.pk.inverse();
    }
    return r;
}

RadicalValue rv_pow(const RadicalValue& a, long e) {
    RingCtx rc{a.k, a.pk};
    if (e < 0) return rv_pow(rv_inv(a), -e);
    RadicalValue r = rv_scalar(rc, Cyclo12(1));
    RadicalValue base = a;
    while (e) {
        if (e & 1) r = rv_mul(r, base);
        base = rv_mul(base, base);
        e >>= 1;
    }
    return r;
}

struct DVal {
    RadicalValue v, d;
};

DVal dv_add(const DVal& a, const DVal& b) { return {rv_add(a.v, b.v), rv_add(a.d, b.d)}; }
DVal dv_sub(const DVal& a, const DVal& b) { return {rv_sub(a.v, b.v), rv_sub(a.d, b.d)}; }
DVal dv_neg(const DVal& a) { return {rv_neg(a.v), rv_neg(a.d)}; }

DVal dv_mul(const DVal& a, const DVal& b) {
    return {rv_mul(a.v, b.v), rv_add(rv_mul(a.d, b.v), rv_mul(a.v, b.d))};
}

DVal dv_div(const DVal& a, const DVal& b) {
    RadicalValue binv = rv_inv(b.v);
    RadicalValue q = rv_mul(a.v, binv);
    // (a/b)' = a'/b - (a/b) b'/b
    RadicalValue d = rv_sub(rv_mul(a.d, binv), rv_mul(q, rv_mul(b.d, binv)));
    return {q, d};
}

DVal dv_pow(const DVal& a, long e) {
    RingCtx rc{a.v.k, a.v.pk};
    if (e == 0) return {rv_scalar(rc, Cyclo12(1)), rv_scalar(rc, Cyclo12(0))};
    RadicalValue v = rv_pow(a.v, e);
    // d(a^e) = e a^{e-1} a'
    RadicalValue d = rv_mul(rv_mul(rv_scalar(rc, Cyclo12(Rational(e))), rv_pow(a.v, e - 1)), a.d);
    return {v, d};
}

// ---- expression parsing ---------------------------------------------------

struct Node {
    enum Kind { Num, Var, Add, Sub, Mul, Div, Neg, Pow, Diff } kind;
    long num = 0;
    std::string name;
    std::vector<std::unique_ptr<Node>> child;
    long expo = 0;
};

using NodePtr = std::unique_ptr<Node>;

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    bool take(char c) {
        if (!peek(c)) return false;
        ++i;
        return true;
    }

    NodePtr expr() {
        NodePtr a = term();
        for (;;) {
            if (take('+')) {
                auto n = std::make_unique<Node>();
                n->kind = Node::Add;
                n->child.push_back(std::move(a));
                n->child.push_back(term());
                a = std::move(n);
            } else if (take('-')) {
                auto n = std::make_unique<Node>();
                n->kind = Node::Sub;
                n->child.push_back(std::move(a));
                n->child.push_back(term());
                a = std::move(n);
            } else
                return a;
        }
    }

    NodePtr term() {
        NodePtr a = factor();
        for (;;) {
            if (take('*')) {
                auto n = std::make_unique<Node>();
                n->kind = Node::Mul;
                n->child.push_back(std::move(a));
                n->child.push_back(factor());
                a = std::move(n);
            } else if (take('/')) {
                auto n = std::make_unique<Node>();
                n->kind = Node::Div;
                n->child.push_back(std::move(a));
                n->child.push_back(factor());
                a = std::move(n);
            } else
                return a;
        }
    }

    NodePtr factor() {
        if (take('-')) {
            auto n = std::make_unique<Node>();
            n->kind = Node::Neg;
            n->child.push_back(factor());
            return n;
        }
        return power();
    }

    NodePtr power() {
        NodePtr a = atom();
        if (take('^')) {
            long sign = take('-') ? -1 : 1;
            skip();
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) throw Error("ParseError", "exponent must be an integer: " + s);
            auto n = std::make_unique<Node>();
            n->kind = Node::Pow;
            n->expo = sign * std::stol(s.substr(start, i - start));
            n->child.push_back(std::move(a));
            return n;
        }
        return a;
    }

    NodePtr atom() {
        skip();
        if (take('(')) {
            NodePtr a = expr();
            if (!take(')')) throw Error("ParseError", "missing ) in " + s);
            return a;
        }
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            auto n = std::make_unique<Node>();
            n->kind = Node::Num;
            n->num = std::stol(s.substr(start, i - start));
            return n;
        }
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        if (start == i) throw Error("ParseError", "unexpected character in " + s);
        std::string name = s.substr(start, i - start);
        if (name == "d" && take('(')) {
            NodePtr a = expr();
            if (!take(')')) throw Error("ParseError", "missing ) after d( in " + s);
            auto n = std::make_unique<Node>();
            n->kind = Node::Diff;
            n->child.push_back(std::move(a));
            return n;
        }
        auto n = std::make_unique<Node>();
        n->kind = Node::Var;
        n->name = name;
        return n;
    }
};

} // namespace

// ---- map evaluation -------------------------------------------------------

struct MapEvaluator::Impl {
    MapSpec spec;
    RingCtx rc;
    std::map<std::string, DVal> env;

    DVal eval_node(const Node& n) const {
        switch (n.kind) {
        case Node::Num:
            return {rv_scalar(rc, Cyclo12(Rational(n.num))), rv_scalar(rc, Cyclo12(0))};
        case Node::Var: {
            if (n.name == "zeta6")
                return {rv_scalar(rc, Cyclo12::zeta6()), rv_scalar(rc, Cyclo12(0))};
            if (n.name == "zeta12")
                return {rv_scalar(rc, Cyclo12::zeta12()), rv_scalar(rc, Cyclo12(0))};
            auto it = env.find(n.name);
            if (it == env.end()) throw Error("ParseError", "unknown name " + n.name);
            return it->second;
        }
        case Node::Add:
            return dv_add(eval_node(*n.child[0]), eval_node(*n.child[1]));
        case Node::Sub:
            return dv_sub(eval_node(*n.child[0]), eval_node(*n.child[1]));
        case Node::Mul:
            return dv_mul(eval_node(*n.child[0]), eval_node(*n.child[1]));
        case Node::Div:
            return dv_div(eval_node(*n.child[0]), eval_node(*n.child[1]));
        case Node::Neg:
            return dv_neg(eval_node(*n.child[0]));
        case Node::Pow:
            return dv_pow(eval_node(*n.child[0]), n.expo);
        case Node::Diff: {
            DVal a = eval_node(*n.child[0]);
            return {a.d, rv_scalar(rc, Cyclo12(0))};
        }
        }
        throw Error("ParseError", "bad node");
    }

    DVal eval_text(const std::string& text) const {
        Parser p(text);
        NodePtr n = p.expr();
        p.skip();
        if (p.i != text.size()) throw Error("ParseError", "trailing input in " + text);
        return eval_node(*n);
    }
};

MapEvaluator::MapEvaluator(const MapSpec& spec, const Rational& given_value,
                           const Rational& indep_value) {
    impl_ = std::make_shared<Impl>();
    impl_->spec = spec;
    if (spec.givens.size() > 1)
        throw Error("BadMapSpec", "at most one free parameter is supported");

    // scalar pass (no radical yet) to get the radical value and its derivative
    impl_->rc = RingCtx{1, Cyclo12(0)};
    if (!spec.givens.empty())
        impl_->env[spec.givens[0]] = {rv_scalar(impl_->rc, Cyclo12(given_value)),
                                      rv_scalar(impl_->rc, Cyclo12(0))};
    impl_->env[spec.indep] = {rv_scalar(impl_->rc, Cyclo12(indep_value)),
                              rv_scalar(impl_->rc, Cyclo12(1))};
    DVal radical = impl_->eval_text(spec.radical_value);
    Cyclo12 P = radical.v.scalar();
    Cyclo12 Pd = radical.d.scalar();
    if (P.is_zero()) throw Error("ExceptionalPoint", "radical value vanishes at the sample");

    // rebuild the environment over K(u)
    impl_->rc = RingCtx{spec.radical_power, P};
    impl_->env.clear();
    if (!spec.givens.empty())
        impl_->env[spec.givens[0]] = {rv_scalar(impl_->rc, Cyclo12(given_value)),
                                      rv_scalar(impl_->rc, Cyclo12(0))};
    impl_->env[spec.indep] = {rv_scalar(impl_->rc, Cyclo12(indep_value)),
                              rv_scalar(impl_->rc, Cyclo12(1))};
    // d(u) = P' u / (k P)
    Cyclo12 slope = Pd * (Cyclo12(Rational(spec.radical_power)) * P).inverse();
    RadicalValue u = rv_u(impl_->rc);
    impl_->env[spec.radical_var] = {u, rv_mul(rv_scalar(impl_->rc, slope), u)};
    for (const auto& [name, text] : spec.defs) impl_->env[name] = impl_->eval_text(text);
}

RadicalValue MapEvaluator::eval(const std::string& expression) const {
    return impl_->eval_text(expression).v;
}

MapReport verify_map(const std::string& spec_name, const Rational& given_value,
                     const std::vector<Rational>& samples) {
    const MapSpec& spec = mapspec_get(spec_name);
    MapReport rep;
    rep.name = spec_name;
    for (const auto& mc : spec.checks) {
        MapCheckResult r;
        r.label = mc.label;
        r.expect_zero = mc.expect_zero;
        r.zero = true;
        rep.checks.push_back(r);
    }
    for (const auto& x0 : samples) {
        std::unique_ptr<MapEvaluator> ev;
        try {
            ev = std::make_unique<MapEvaluator>(spec, given_value, x0);
        } catch (const Error& e) {
            if (e.code() == "ExceptionalPoint" || e.code() == "DivisionByZero") continue;
            throw;
        }
        bool used = false;
        for (size_t i = 0; i < spec.checks.size(); ++i) {
            try {
                RadicalValue res = ev->eval(spec.checks[i].expression);
                used = true;
                if (!res.is_zero() && rep.checks[i].zero) {
                    rep.checks[i].zero = false;
                    rep.checks[i].witness = res.str();
                }
            } catch (const Error& e) {
                if (e.code() == "ExceptionalPoint" || e.code() == "DivisionByZero") continue;
                throw;
            }
        }
        if (used) ++rep.samples_used;
    }
    if (rep.samples_used == 0) throw Error("ExceptionalPoint", "no usable sample points");
    rep.ok = true;
    for (const auto& r : rep.checks)
        if (r.zero != r.expect_zero) rep.ok = false;
    return rep;
}

MapReport verify_map_random(const std::string& spec_name, unsigned seed, size_t nsamples) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-24, 24);
    std::uniform_int_distribution<int> den(1, 12);
    std::uniform_int_distribution<int> zden(7, 40);
    int zd = zden(rng);
    std::uniform_int_distribution<int> znum(1, zd - 1);
    Rational z(znum(rng), zd);
    std::vector<Rational> samples;
    while (samples.size() < nsamples) {
        int n = num(rng);
        if (n == 0) continue;
        samples.emplace_back(n, den(rng));
    }
    return verify_map(spec_name, z, samples);
}

// ---- genus ----------------------------------------------------------------

long superelliptic_genus(long k, const std::vector<long>& exponents) {
    if (k < 2 || exponents.size() != 3)
        throw Error("DegenerateBranchData", "need k >= 2 and three branch exponents");
    std::vector<long> ms = exponents;
    ms.push_back(-(ms[0] + ms[1] + ms[2]));
    long sum = 0;
    for (size_t i = 0; i < ms.size(); ++i) {
        long r = ((ms[i] % k) + k) % k;
        if (i < 3 && r == 0)
            throw Error("DegenerateBranchData", "branch exponent divisible by k");
        sum += k - std::gcd(k, r == 0 ? k : r);
    }
    long total = -2 * k + sum;
    if (total % 2 != 0) throw Error("DegenerateBranchData", "odd Euler characteristic");
    return total / 2 + 1;
}

// ---- Pochhammer-cycle periods --------------------------------------------

namespace {

// integral of x^{e0} (1-x)^{e1} (z-x)^{ez} dx along the polyline, with the
// second and third factors taken literally (principal at the first segment
// midpoint) rather than as (x-root) powers
Complex eta_integral(const std::vector<Complex>& path, const Complex& z, const Rational& e0,
                     const Rational& e1, const Rational& ez, const PrecisionCtx& ctx) {
    std::vector<SegmentFactor> f{{Complex(0), e0}, {Complex(1), e1}, {z, ez}};
    Complex raw = path_power_integral(path, f, ctx);
    Complex m = path[0] + Complex(Real(1) / 2) * (path[1] - path[0]);
    Complex corr = exp(Complex(to_real(e1)) * (log(Complex(1) - m) - log(m - Complex(1))) +
                       Complex(to_real(ez)) * (log(z - m) - log(m - z)));
    return raw * corr;
}

} // namespace

Complex eta_period(long k, const std::array<long, 3>& m, const Complex& z, Cycle cycle,
                   EtaForm form, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    if (k < 2) throw Error("DegenerateBranchData", "k must be at least 2");
    Rational e0(-m[0], k), e1(-m[1], k), ez(-m[2], k);
    Complex sign(1);
    if (form == EtaForm::eta2) {
        // x dx / ((x-1) y): the quadrature uses the literal factor (1-x)
        e0 += 1;
        e1 -= 1;
        sign = Complex(-1);
    }
    switch (cycle) {
    case Cycle::zero_z: {
        std::vector<Complex> path{Complex(0), z};
        return sign * pochhammer_factor(e0, ez, ctx) * eta_integral(path, z, e0, e1, ez, ctx);
    }
    case Cycle::one_z: {
        auto path = commutator_path(Complex(1), z);
        Complex phase = exp(Complex(Real(0), -2 * const_pi() * to_real(ez)));
        return sign * eta_integral(path, z, e0, e1, ez, ctx) * phase;
    }
    case Cycle::zero_one: {
        auto path = commutator_path(Complex(0), Complex(1));
        return sign * eta_integral(path, z, e0, e1, ez, ctx);
    }
    }
    throw Error("BadCycle", "unknown cycle");
}

Real period_matrix_compare(const Complex& z, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    HypergeomParams p{Rational(5, 6), Rational(1, 6), Rational(1)};
    FundamentalMatrix cf = period_matrix_closed_form(p, z, ctx);
    std::array<long, 3> m{1, 1, 5};
    CMatrix quad{{eta_period(6, m, z, Cycle::zero_z, EtaForm::eta1, ctx),
                  eta_period(6, m, z, Cycle::one_z, EtaForm::eta1, ctx)},
                 {eta_period(6, m, z, Cycle::zero_z, EtaForm::eta2, ctx),
                  eta_period(6, m, z, Cycle::one_z, EtaForm::eta2, ctx)}};
    return cmat_max_diff(quad, cf.entries);
}

} // namespace periodlab
