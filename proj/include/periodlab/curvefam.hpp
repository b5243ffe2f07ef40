#ifndef PERIODLAB_CURVEFAM_HPP
#define PERIODLAB_CURVEFAM_HPP

#include "periodlab/catalog.hpp"
#include "periodlab/quadrature.hpp"

#include <array>

namespace periodlab {

// Element of the cyclotomic field of the twelfth roots of unity, with basis
// 1, w, w^2, w^3 where w = e^{i pi/6} and w^4 = w^2 - 1.
struct Cyclo12 {
    std::array<Rational, 4> c{};

    Cyclo12() = default;
    Cyclo12(const Rational& q) { c[0] = q; }
    Cyclo12(int n) { c[0] = n; }
    static Cyclo12 zeta12() {
        Cyclo12 r;
        r.c[1] = 1;
        return r;
    }
    static Cyclo12 zeta6() {
        Cyclo12 r;
        r.c[2] = 1;
        return r;
    }

    bool is_zero() const;
    bool is_rational() const;

    Cyclo12 operator-() const;
    Cyclo12& operator+=(const Cyclo12& o);
    Cyclo12& operator-=(const Cyclo12& o);
    Cyclo12 operator*(const Cyclo12& o) const;
    Cyclo12 inverse() const; // throws DivisionByZero

    bool operator==(const Cyclo12& o) const { return c == o.c; }

    Complex to_complex(const PrecisionCtx& ctx) const;
    std::string str() const;
};

inline Cyclo12 operator+(Cyclo12 a, const Cyclo12& b) { return a += b; }
inline Cyclo12 operator-(Cyclo12 a, const Cyclo12& b) { return a -= b; }

// Value in the radical extension K(u), u^k = P with K the cyclotomic
// coefficient field: coefficients of 1, u, ..., u^{k-1}.
struct RadicalValue {
    long k = 1;
    Cyclo12 pk; // u^k
    std::vector<Cyclo12> coeff;

    bool is_zero() const;
    bool is_scalar() const;
    const Cyclo12& scalar() const; // requires is_scalar
    std::string str() const;
};

// Exact evaluation of one map stanza at a rational sample: builds the
// environment (givens, radical variable, defs) and evaluates expressions in
// K(u) with dual-number derivatives with respect to the stanza's independent
// variable (the d(...) primitive).
class MapEvaluator {
public:
    MapEvaluator(const MapSpec& spec, const Rational& given_value, const Rational& indep_value);

    RadicalValue eval(const std::string& expression) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

struct MapCheckResult {
    std::string label;
    bool expect_zero = true;
    bool zero = false;
    std::string witness; // nonzero residual at the first failing sample
};

struct MapReport {
    std::string name;
    std::vector<MapCheckResult> checks;
    size_t samples_used = 0;
    bool ok = false; // every check matched its expectation at every sample
};

MapReport verify_map(const std::string& spec_name, const Rational& given_value,
                     const std::vector<Rational>& samples);
// 20 random small-height rational samples (and a random rational z in (0,1)
// unless pinned), seed-reproducible.
MapReport verify_map_random(const std::string& spec_name, unsigned seed, size_t nsamples = 20);

// Riemann-Hurwitz genus of y^k = x^{m0} (1-x)^{m1} (z-x)^{mz} over the
// x-line; the exponent at infinity is -(m0+m1+mz) mod k.
long superelliptic_genus(long k, const std::vector<long>& exponents);

enum class EtaForm { eta1, eta2 };
enum class Cycle { zero_z, one_z, zero_one };

// Period of eta over the Pochhammer double-commutator cycle attached to the
// endpoint pair; eta1 = dx/y, eta2 = x dx/((x-1) y) on the superelliptic
// curve. Branches are principal at the connecting-segment midpoint.
Complex eta_period(long k, const std::array<long, 3>& m, const Complex& z, Cycle cycle,
                   EtaForm form, const PrecisionCtx& ctx);

// Max entrywise deviation between the quadrature period matrix of the
// (6; 1,1,5) curve and the closed-form hypergeometric matrix at the same z.
Real period_matrix_compare(const Complex& z, const PrecisionCtx& ctx);

} // namespace periodlab

#endif
