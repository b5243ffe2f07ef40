#ifndef PERIODLAB_HYPERGEOM_HPP
#define PERIODLAB_HYPERGEOM_HPP

#include "periodlab/numerics.hpp"
#include "periodlab/ode.hpp"

namespace periodlab {

struct HypergeomParams {
    Rational a, b, c;

    Rational nu0() const { return c - 1; }
    Rational nu1() const { return c - a - b; }
    Rational nu_inf() const { return a - b; }
    // parameter triple of the companion convention (a'=a-c+1, b'=b-c+1, c'=2-c)
    HypergeomParams primed() const { return {a - c + 1, b - c + 1, 2 - c}; }
    bool degenerate_at_one() const { return is_nonpositive_integer(c - a - b) || c == a + b; }
};

enum class FMRep { akh, ukh };

struct FundamentalMatrix {
    HypergeomParams params;
    Complex z;
    CMatrix entries; // 2x2
    FMRep rep;
};

struct MonodromyTriple {
    CMatrix A0, A1, Ainf;
};

struct DetRelationReport {
    std::vector<Complex> normalized_values; // det(Y) |z|^{1-c} |1-z|^{1+a+b-c} per sample
    Real max_deviation;
    Complex constant;               // first sample value
    Complex reference;              // pi B(a,c-a)/B(b,c-b)
    Complex ratio;                  // constant / reference
};

// Gauss series inside the unit disk; tail bound < 2^-bits.
Complex f21(const HypergeomParams& p, const Complex& z, const PrecisionCtx& ctx);

// d/dz F(a,b,c|z) = (ab/c) F(a+1,b+1,c+1|z)
Complex f21_derivative(const HypergeomParams& p, const Complex& z, const PrecisionCtx& ctx);

// F evaluated anywhere off the cut by ODE continuation along the given path
// from a small positive basepoint (path defaults to upper half-plane detour).
Complex f21_continued(const HypergeomParams& p, const Complex& z, const PrecisionCtx& ctx,
                      bool through_upper_half_plane = true);

// Gauss summation Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)); requires
// Re(c-a-b) > 0.
Complex gauss_value_at_one(const HypergeomParams& p, const PrecisionCtx& ctx);

// (1 - e^{2 pi i alpha})(1 - e^{2 pi i mu})
Complex pochhammer_factor(const Rational& alpha, const Rational& mu, const PrecisionCtx& ctx);

// The hypergeometric 2x2 system Y' = A(z) Y.
FirstOrderSystem gauss_system(const HypergeomParams& p);
// Companion system of the scalar Gauss equation.
ScalarODE gauss_equation(const HypergeomParams& p);

FundamentalMatrix fundamental_matrix(const HypergeomParams& p, const Complex& z,
                                     const PrecisionCtx& ctx, FMRep rep = FMRep::akh);

// Closed-form value of the period matrix for the [gamma_0,gamma_z] and
// [gamma_1,gamma_z] cycles; handles the c = a+b degeneration by contiguity.
FundamentalMatrix period_matrix_closed_form(const HypergeomParams& p, const Complex& z,
                                            const PrecisionCtx& ctx);

// Schwarz map value D(nu0, nu1, nu_inf | z).
Complex schwarz_map(const HypergeomParams& p, const Complex& z, const PrecisionCtx& ctx);

MonodromyTriple monodromy_closed_form(const HypergeomParams& p, const PrecisionCtx& ctx);

DetRelationReport det_relation_check(const HypergeomParams& p, const std::vector<Rational>& samples,
                                     const PrecisionCtx& ctx);

} // namespace periodlab

#endif
