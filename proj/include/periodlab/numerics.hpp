#ifndef PERIODLAB_NUMERICS_HPP
#define PERIODLAB_NUMERICS_HPP

#include "periodlab/complex.hpp"

namespace periodlab {

// Gamma function for real arguments via mpfr; throws PoleAtNonpositiveInteger.
Real gamma_real(const Real& x, const PrecisionCtx& ctx);
Real gamma_rat(const Rational& x, const PrecisionCtx& ctx);

// Gamma for complex arguments (Spouge series after reflection into Re z >= 1/2).
Complex gamma(const Complex& x, const PrecisionCtx& ctx);

// B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b)
Real beta(const Rational& a, const Rational& b, const PrecisionCtx& ctx);

// exp(e * Log base) with the principal Log.
Complex pow_principal(const Complex& base, const Rational& e, const PrecisionCtx& ctx);
Complex pow_principal(const Complex& base, const Complex& e, const PrecisionCtx& ctx);

// exp(2 pi i k/d)
Complex root_of_unity(long d, long k, const PrecisionCtx& ctx);

// Certified agreement: number of decimal digits on which x agrees with y.
long agreement_digits(const Complex& x, const Complex& y);

} // namespace periodlab

#endif
