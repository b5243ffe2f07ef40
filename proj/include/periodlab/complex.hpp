#ifndef PERIODLAB_COMPLEX_HPP
#define PERIODLAB_COMPLEX_HPP

#include "periodlab/precision.hpp"

namespace periodlab {

// Arbitrary-precision complex value. Components are mpfr reals at whatever
// precision was active when they were produced.
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int n) : re(n), im(0) {}
    Complex(const Rational& q) : re(to_real(q)), im(0) {}

    Complex operator-() const { return {-re, -im}; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = r;
        return *this;
    }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

inline Complex conj(const Complex& a) { return {a.re, -a.im}; }
inline Real abs(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }
inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }

// Principal argument in (-pi, pi]; a negative-zero imaginary part is treated
// as +0 so that negative reals land on the +pi side of the cut.
inline Real arg(const Complex& a) {
    Real r;
    Real im = a.im;
    if (im == 0) im = Real(0);
    mpfr_atan2(r.backend().data(), im.backend().data(), a.re.backend().data(), MPFR_RNDN);
    return r;
}

inline Complex exp(const Complex& a) {
    Real e = exp(a.re);
    return {e * cos(a.im), e * sin(a.im)};
}

// Principal branch, Im in (-pi, pi].
inline Complex log(const Complex& a) { return {log(abs(a)), arg(a)}; }

inline Complex sqrt(const Complex& a) {
    if (a.im == 0 && a.re >= 0) return Complex(sqrt(a.re));
    Real m = abs(a);
    Real r = sqrt((m + a.re) / 2);
    Real i = sqrt((m - a.re) / 2);
    if (a.im < 0) i = -i;
    return {r, i};
}

inline Complex inv(const Complex& a) { return Complex(1) / a; }

// exp(i*theta)
inline Complex cis(const Real& theta) { return {cos(theta), sin(theta)}; }

inline Complex pow_int(Complex base, long e) {
    if (e < 0) return inv(pow_int(base, -e));
    Complex r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

} // namespace periodlab

#endif
