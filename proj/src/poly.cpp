#include "periodlab/poly.hpp"
#include <sstream>
#include <cctype>

namespace periodlab {

Poly Poly::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }
Poly operator*(Poly a, const Rational& s) { return a *= s; }

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Complex Poly::eval(const Complex& x) const {
    Complex r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + Complex(c_[i]);
    return r;
}

Real Poly::eval(const Real& x) const {
    Real r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + to_real(c_[i]);
    return r;
}

Poly Poly::compose(const Poly& inner) const {
    Poly r;
    for (size_t i = c_.size(); i-- > 0;) r = r * inner + Poly(c_[i]);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Rational inv_lc = Rational(1) / lc();
    Poly p(*this);
    p *= inv_lc;
    return p;
}

Rational Poly::content() const {
    if (is_zero()) return Rational(0);
    BigInt g(0), l(1);
    for (const auto& q : c_) {
        g = gcd(g, numerator(q));
        l = lcm(l, denominator(q));
    }
    if (g < 0) g = -g;
    return Rational(g, l);
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    Rational c = content();
    Poly p(*this);
    p *= Rational(1) / c;
    if (p.lc() < 0) p *= Rational(-1);
    return p;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    Poly r = a;
    std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0,
                            Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long shift = r.degree() - b.degree();
        Rational f = r.lc() / b.lc();
        q[shift] = f;
        r -= Poly::monomial(f, shift) * b;
    }
    return {Poly(std::move(q)), r};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly g = gcd(a, b);
    return divmod(a * b, g).first.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() < 1) return out;
    // Yun's algorithm
    Poly a = p.monic();
    Poly d = a.derivative();
    Poly g = gcd(a, d);
    Poly w = divmod(a, g).first;
    Poly y = divmod(d, g).first;
    int i = 1;
    while (w.degree() > 0) {
        Poly z = y - w.derivative();
        Poly f = gcd(w, z);
        if (f.degree() > 0) out.push_back({f, i});
        w = divmod(w, f).first;
        y = divmod(z, f).first;
        ++i;
    }
    return out;
}

// ---- string formatting / parsing -----------------------------------------

static std::string rat_str(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational q = c_[i];
        if (first) {
            if (q < 0) {
                os << "-";
                q = -q;
            }
        } else {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        bool unit = (q == 1) && i > 0;
        if (!unit) os << rat_str(q);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly Poly::parse(const std::string& text, const std::string& var) {
    std::vector<Rational> coeffs;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    auto add = [&](size_t deg, const Rational& c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
        coeffs[deg] += c;
    };
    skip_ws();
    bool expect_term = true;
    int sign = 1;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        char ch = text[i];
        if (ch == '+' || ch == '-') {
            sign = (ch == '-') ? -sign : sign;
            ++i;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw Error("ParseError", "unexpected '" + std::string(1, ch) + "' in polynomial");
        // term: [number][/den][* ] [var[^k]]
        Rational coef(1);
        bool have_num = false;
        size_t start = i;
        while (i < text.size() && (std::isdigit((unsigned char)text[i]))) ++i;
        if (i > start) {
            have_num = true;
            BigInt num(text.substr(start, i - start));
            BigInt den(1);
            skip_ws();
            if (i < text.size() && text[i] == '/') {
                ++i;
                skip_ws();
                size_t ds = i;
                while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
                if (i == ds) throw Error("ParseError", "missing denominator");
                den = BigInt(text.substr(ds, i - ds));
            }
            coef = Rational(num, den);
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        size_t deg = 0;
        if (i + var.size() <= text.size() && text.compare(i, var.size(), var) == 0) {
            i += var.size();
            deg = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                size_t es = i;
                while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
                if (i == es) throw Error("ParseError", "missing exponent");
                deg = std::stoul(text.substr(es, i - es));
            }
        } else if (!have_num) {
            throw Error("ParseError", "expected term in polynomial near index " + std::to_string(i));
        }
        add(deg, Rational(sign) * coef);
        sign = 1;
        expect_term = false;
    }
    return Poly(std::move(coeffs));
}

} // namespace periodlab
