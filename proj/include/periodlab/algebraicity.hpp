#ifndef PERIODLAB_ALGEBRAICITY_HPP
#define PERIODLAB_ALGEBRAICITY_HPP

#include "periodlab/numerics.hpp"

#include <optional>
#include <vector>

namespace periodlab {

// Primitive integer vector a with |sum a_i x_i| below the acceptance
// threshold, together with the residual actually achieved.
struct IntegerRelationResult {
    std::vector<BigInt> coefficients;
    Real residual;
    BigInt height_bound;
    long verified_at_bits = 0;
};

struct MinimalPolynomialCandidate {
    std::vector<BigInt> coefficients; // ascending, primitive, leading > 0
    long degree = 0;
    BigInt height;
    Real residual;

    std::string str() const; // "x^4 - x^2 + 1"
};

enum class AlgebraicityVerdict { AlgebraicFound, NoRelationAtBounds, Inconclusive };

struct AlgebraicityReport {
    AlgebraicityVerdict verdict = AlgebraicityVerdict::NoRelationAtBounds;
    std::optional<MinimalPolynomialCandidate> polynomial;
    long max_deg = 0;
    BigInt max_height;
    long precision_bits = 0;
    std::string note;
};

// Lattice reduction (LLL, delta = 0.99) on integer row vectors, in place.
void lll_reduce(std::vector<std::vector<BigInt>>& basis, const PrecisionCtx& ctx);

// Integer relation sum a_i x_i ~ 0 with |a_i| <= max_height and residual
// below 2^{-bits/2}; none when no such vector survives. Throws
// PrecisionTooLow when bits < 4 log2(height) n.
std::optional<IntegerRelationResult> integer_relation(const std::vector<Real>& values,
                                                      const BigInt& max_height,
                                                      const PrecisionCtx& ctx);

// Same with one shared coefficient vector annihilating real and imaginary
// parts simultaneously.
std::optional<IntegerRelationResult> integer_relation(const std::vector<Complex>& values,
                                                      const BigInt& max_height,
                                                      const PrecisionCtx& ctx);

// Lowest-degree certified candidate from relations on (1, x, ..., x^d).
std::optional<MinimalPolynomialCandidate> minimal_polynomial(const Complex& x, long max_deg,
                                                             const BigInt& max_height,
                                                             const PrecisionCtx& ctx);

// Is r/s algebraic of bounded degree and height?
AlgebraicityReport sim_test(const Complex& r, const Complex& s, long max_deg,
                            const BigInt& max_height, const PrecisionCtx& ctx);

struct Cyclotomic3Result {
    Rational p, q; // x = p + q zeta3
};

// Recognition of x in Q(zeta3) with bounded-height rational coordinates.
std::optional<Cyclotomic3Result> in_cyclotomic3(const Complex& x, const BigInt& max_height,
                                                const PrecisionCtx& ctx);

// Gamma(1/3)^3 / pi^2
Real gamma_third_cubed_over_pi2(const PrecisionCtx& ctx);

// sim_test against Gamma(1/3)^3/pi^2 with the default bounds (deg 8, 10^8).
AlgebraicityReport gamma_quotient_test(const Complex& value, const PrecisionCtx& ctx);

} // namespace periodlab

#endif
