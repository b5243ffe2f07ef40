#ifndef PERIODLAB_RATFUNC_HPP
#define PERIODLAB_RATFUNC_HPP

#include "periodlab/poly.hpp"
#include <optional>

namespace periodlab {

// Reduced rational function over Q: gcd(num, den) = 1, den monic.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(Poly num, Poly den);
    RationalFunction(const Poly& p) : num_(p), den_(1) {}
    RationalFunction(const Rational& q) : num_(Poly(q)), den_(1) {}
    RationalFunction(int n) : num_(Poly(n)), den_(1) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const { return raw(-num_, den_); }
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    RationalFunction derivative() const;
    Complex eval(const Complex& x) const;
    Rational eval(const Rational& x) const;
    RationalFunction compose(const Poly& inner) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    std::string str(const std::string& var = "t") const;

private:
    static RationalFunction raw(Poly n, Poly d) {
        RationalFunction r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }
    Poly num_, den_;
};

RationalFunction operator+(RationalFunction a, const RationalFunction& b);
RationalFunction operator-(RationalFunction a, const RationalFunction& b);
RationalFunction operator*(RationalFunction a, const RationalFunction& b);
RationalFunction operator/(RationalFunction a, const RationalFunction& b);

using RFVector = std::vector<RationalFunction>;

class RatFuncMatrix {
public:
    RatFuncMatrix() : rows_(0), cols_(0) {}
    RatFuncMatrix(size_t r, size_t c) : rows_(r), cols_(c), e_(r * c) {}
    static RatFuncMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    RationalFunction& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const RationalFunction& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    RatFuncMatrix operator*(const RatFuncMatrix& o) const;
    RatFuncMatrix operator+(const RatFuncMatrix& o) const;
    RatFuncMatrix scale(const RationalFunction& s) const;
    RatFuncMatrix derivative() const;
    RatFuncMatrix inverse() const; // throws SingularGauge
    RationalFunction trace() const;
    RFVector apply(const RFVector& v) const;       // A v
    RFVector apply_left(const RFVector& v) const;  // v^T A

    bool operator==(const RatFuncMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    size_t rows_, cols_;
    std::vector<RationalFunction> e_;
};

// Nonzero coefficients (c_0..c_k), last nonzero normalized to 1, with
// sum c_i v_i = 0 exactly; nullopt when the vectors are independent.
std::optional<RFVector> linear_dependency(const std::vector<RFVector>& vectors);

} // namespace periodlab

#endif
