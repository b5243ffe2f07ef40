#ifndef PERIODLAB_POLY_HPP
#define PERIODLAB_POLY_HPP

#include "periodlab/complex.hpp"
#include <vector>
#include <string>

namespace periodlab {

// Univariate polynomial over Q, coefficients ascending.
class Poly {
public:
    Poly() = default;
    Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(const Rational& c) : c_{c} { trim(); }
    Poly(int n) : c_{Rational(n)} { trim(); }

    static Poly variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static Poly monomial(const Rational& c, size_t deg) {
        std::vector<Rational> v(deg + 1, Rational(0));
        v[deg] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    const Rational& operator[](size_t i) const { return c_[i]; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& lc() const { return c_.back(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    Complex eval(const Complex& x) const;
    Real eval(const Real& x) const;
    Poly compose(const Poly& inner) const;

    // divides all coefficients so the leading coefficient becomes 1
    Poly monic() const;
    // gcd of integer numerators over lcm of denominators, as positive rational
    Rational content() const;
    // integer-coefficient primitive form: p / content, sign fixed so lc > 0
    Poly primitive() const;

    std::string str(const std::string& var = "t") const;
    static Poly parse(const std::string& text, const std::string& var = "t");

    bool operator==(const Poly& o) const { return c_ == o.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Poly& b);
Poly operator*(Poly a, const Rational& s);

// quotient/remainder over Q; throws on zero divisor
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b); // monic
Poly lcm(const Poly& a, const Poly& b);

// Square-free decomposition: list of (factor, multiplicity).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// All complex roots with multiplicity, Aberth iteration on square-free parts,
// residual-certified. Throws IterationDivergence if the target is unmet.
std::vector<Complex> poly_roots_numeric(const Poly& p, const PrecisionCtx& ctx);

// Aberth-Ehrlich on arbitrary complex coefficients (assumed square-free).
std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, const PrecisionCtx& ctx);

} // namespace periodlab

#endif
