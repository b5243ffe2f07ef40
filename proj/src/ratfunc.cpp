#include "periodlab/ratfunc.hpp"

namespace periodlab {

static void reduce(Poly& n, Poly& d) {
    if (d.is_zero()) throw Error("DivisionByZero", "rational function with zero denominator");
    if (n.is_zero()) {
        d = Poly(1);
        return;
    }
    Poly g = gcd(n, d);
    if (g.degree() > 0) {
        n = divmod(n, g).first;
        d = divmod(d, g).first;
    }
    Rational lc = d.lc();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        n *= inv;
        d *= inv;
    }
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce(num_, den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce(num_, den_);
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce(num_, den_);
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce(num_, den_);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw Error("DivisionByZero", "division by zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce(num_, den_);
    return *this;
}

RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

RationalFunction RationalFunction::derivative() const {
    // (n/d)' = (n'd - nd')/d^2
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Complex RationalFunction::eval(const Complex& x) const {
    return num_.eval(x) / den_.eval(x);
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw Error("ExceptionalPoint", "denominator vanishes");
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::compose(const Poly& inner) const {
    return RationalFunction(num_.compose(inner), den_.compose(inner));
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFuncMatrix RatFuncMatrix::identity(size_t n) {
    RatFuncMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = RationalFunction(1);
    return m;
}

RatFuncMatrix RatFuncMatrix::operator*(const RatFuncMatrix& o) const {
    if (cols_ != o.rows_) throw Error("DimensionMismatch", "matrix product");
    RatFuncMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < o.cols_; ++j) {
            RationalFunction s;
            for (size_t k = 0; k < cols_; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    return r;
}

RatFuncMatrix RatFuncMatrix::operator+(const RatFuncMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("DimensionMismatch", "matrix sum");
    RatFuncMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

RatFuncMatrix RatFuncMatrix::scale(const RationalFunction& s) const {
    RatFuncMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

RatFuncMatrix RatFuncMatrix::derivative() const {
    RatFuncMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].derivative();
    return r;
}

RationalFunction RatFuncMatrix::trace() const {
    RationalFunction s;
    for (size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
    return s;
}

RatFuncMatrix RatFuncMatrix::inverse() const {
    if (rows_ != cols_) throw Error("DimensionMismatch", "inverse of non-square matrix");
    size_t n = rows_;
    RatFuncMatrix a(*this);
    RatFuncMatrix inv = identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw Error("SingularGauge", "matrix not invertible over Q(t)");
        if (piv != col)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        RationalFunction p = a(col, col);
        for (size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            RationalFunction f = a(i, col);
            for (size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

RFVector RatFuncMatrix::apply(const RFVector& v) const {
    if (v.size() != cols_) throw Error("DimensionMismatch", "matrix-vector product");
    RFVector r(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        RationalFunction s;
        for (size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

RFVector RatFuncMatrix::apply_left(const RFVector& v) const {
    if (v.size() != rows_) throw Error("DimensionMismatch", "vector-matrix product");
    RFVector r(cols_);
    for (size_t j = 0; j < cols_; ++j) {
        RationalFunction s;
        for (size_t i = 0; i < rows_; ++i) s += v[i] * (*this)(i, j);
        r[j] = s;
    }
    return r;
}

// Kernel search by column elimination over Q(t): content-extracted polynomial
// rows keep the intermediate degrees small.
std::optional<RFVector> linear_dependency(const std::vector<RFVector>& vectors) {
    size_t k = vectors.size();
    if (k == 0) return std::nullopt;
    size_t dim = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != dim) throw Error("DimensionMismatch", "linear_dependency");

    // M is dim x k with columns = vectors; find c with M c = 0, c != 0.
    // Row-reduce the transpose augmented with the identity: rows are the
    // vectors; a zero row in the reduced form exposes the dependency.
    std::vector<RFVector> rows(k);
    std::vector<RFVector> track(k, RFVector(k));
    for (size_t i = 0; i < k; ++i) {
        rows[i] = vectors[i];
        track[i][i] = RationalFunction(1);
    }
    size_t r = 0;
    for (size_t col = 0; col < dim && r < k; ++col) {
        size_t piv = r;
        while (piv < k && rows[piv][col].is_zero()) ++piv;
        if (piv == k) continue;
        std::swap(rows[piv], rows[r]);
        std::swap(track[piv], track[r]);
        for (size_t i = r + 1; i < k; ++i) {
            if (rows[i][col].is_zero()) continue;
            RationalFunction f = rows[i][col] / rows[r][col];
            for (size_t j = 0; j < dim; ++j) rows[i][j] -= f * rows[r][j];
            for (size_t j = 0; j < k; ++j) track[i][j] -= f * track[r][j];
        }
        ++r;
    }
    for (size_t i = r; i < k; ++i) {
        bool zero = true;
        for (const auto& e : rows[i])
            if (!e.is_zero()) {
                zero = false;
                break;
            }
        if (!zero) continue;
        RFVector c = track[i];
        // normalize: last nonzero coefficient = 1
        size_t last = k;
        for (size_t j = k; j-- > 0;)
            if (!c[j].is_zero()) {
                last = j;
                break;
            }
        if (last == k) continue;
        RationalFunction norm = c[last];
        for (auto& e : c) e /= norm;
        return c;
    }
    return std::nullopt;
}

} // namespace periodlab
